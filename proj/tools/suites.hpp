#pragma once

// Verification suites shared by the command-line driver and the acceptance runner.
// Each check reports a pass flag plus a one-line detail; nothing here throws on
// a failed identity.

#include "dedekind_lab/dedekind_lab.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace dlab::suites {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
    std::string provenance;
};

inline std::string fmt(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    std::string s(buf);
    return s == "-0" ? "0" : s;
}

inline std::string join(const std::vector<i64>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

inline const std::vector<ReducedFraction>& identity_cuts() {
    static const std::vector<ReducedFraction> cuts{{1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 7}, {1, 1}};
    return cuts;
}

/// Dedekind-sum identities: three routes agree on F(q_routes), oddness, vanishing
/// row sums for b <= q_rows, and a vanishing total over F(q_total).
inline std::vector<Check> dedekind_identities(i64 q_routes, i64 q_rows, i64 q_total) {
    std::vector<Check> out;
    i64 checked = 0, route_bad = 0, odd_bad = 0;
    for (const auto& x : farey::farey_enumerate(farey::full_range(q_routes))) {
        if (x.num() == x.den()) continue;
        ++checked;
        auto naive = dedekind::dedekind_naive(x.num(), x.den());
        auto fast = dedekind::dedekind_fast(x.num(), x.den());
        auto hick = cf::hickerson_sum(x);
        if (naive != fast || fast != hick) ++route_bad;
        if (dedekind::dedekind_sum(x.complement().num() % x.den(), x.den()) != -fast) ++odd_bad;
    }
    out.push_back({"three-routes", route_bad == 0,
                   std::to_string(checked) + " fractions, " + std::to_string(route_bad) + " mismatches",
                   "naive = reciprocity = continued-fraction formula"});
    out.push_back({"oddness", odd_bad == 0, std::to_string(odd_bad) + " violations of s(1-x) = -s(x)",
                   "s(1-x) = -s(x)"});
    i64 row_bad = 0;
    for (i64 b = 1; b <= q_rows; ++b) {
        i64 scaled = 0;
        for (i64 a = 0; a < b; ++a)
            if (std::gcd(a, b) == 1) scaled += cf::hickerson_scaled(a, b);
        if (scaled != 0) ++row_bad;
    }
    out.push_back({"row-sums", row_bad == 0, "b <= " + std::to_string(q_rows) + ", " + std::to_string(row_bad) + " nonzero",
                   "sum over a mod b of s(a,b) = 0"});
    auto total = farey::aggregate_range(farey::full_range(q_total), farey::Statistic::dedekind_s).total;
    out.push_back({"farey-total", total == 0, "sum over F(" + std::to_string(q_total) + ") = " + format_rational(total),
                   "sum of s over F(Q) = 0"});
    return out;
}

/// Continued-fraction round trips on F(q_round); the length identity and the
/// per-term bound |12 s(x) - (l(x) - l(1-x))| <= 5 on F(q_len).
inline std::vector<Check> cf_identities(i64 q_round, i64 q_len) {
    std::vector<Check> out;
    i64 round_bad = 0, digit_bad = 0, checked = 0;
    for (const auto& x : farey::farey_enumerate(farey::full_range(q_round))) {
        ++checked;
        if (x.num() != x.den()) {
            auto r = cf::regular_cf(x);
            if (cf::eval_regular_cf(r.digits) != x.to_exact()) ++round_bad;
        }
        if (x.num() != 0) {
            auto m = cf::minus_cf(x);
            if (cf::eval_minus_cf(m.digits) != x.to_exact()) ++round_bad;
            for (i64 d : m.digits)
                if (d < 2) ++digit_bad;
        }
    }
    out.push_back({"cf-round-trip", round_bad == 0, std::to_string(checked) + " fractions, " + std::to_string(round_bad) + " failures",
                   "regular and minus expansions evaluate back to x"});
    out.push_back({"minus-digits", digit_bad == 0, std::to_string(digit_bad) + " digits below 2", "minus digits >= 2"});
    i64 eps_bad = 0, sum_bad = 0, bound_bad = 0, worst = 0;
    for (const auto& x : farey::farey_enumerate(farey::full_range(q_len))) {
        if (x.num() == 0 || x.num() == x.den()) continue;
        auto p = cf::cf_profile(x.num(), x.den());
        i64 l = cf::ell_length_raw(x.num(), x.den()), lc = cf::ell_length_raw(x.den() - x.num(), x.den());
        i64 eps = p.sigma_odd - l;
        if (eps != 0 && eps != 1) ++eps_bad;
        if (l + lc != p.sigma_odd + p.sigma_even) ++sum_bad;
        // |12 s - (l - lc)| <= 5  <=>  |24w s - 2w (l - lc)| <= 10 w
        i64 gap = cf::hickerson_scaled(x.num(), x.den()) - 2 * x.den() * (l - lc);
        if (gap < 0) gap = -gap;
        if (gap > 10 * x.den()) ++bound_bad;
        worst = std::max(worst, (gap + x.den() - 1) / x.den());
    }
    out.push_back({"length-correction", eps_bad == 0, std::to_string(eps_bad) + " corrections outside {0,1}",
                   "eps = sigma_odd - l(x) in {0,1}"});
    out.push_back({"length-sum", sum_bad == 0, std::to_string(sum_bad) + " violations on F(" + std::to_string(q_len) + ")",
                   "l(x) + l(1-x) = sum of partial quotients"});
    out.push_back({"per-term-bound", bound_bad == 0,
                   std::to_string(bound_bad) + " violations; max |24w s - 2w(l - l')|/w <= " + std::to_string(worst),
                   "|12 s(x) - (l(x) - l(1-x))| <= 5"});
    return out;
}

/// delta(q) = alpha phi(q) + kappa(q) for q <= qmax, plus |kappa(q)| <= d(q).
inline std::vector<Check> delta_kappa_suite(i64 qmax, const std::vector<ReducedFraction>& cuts) {
    SieveTables sieve(qmax);
    i64 bad = 0, bound_bad = 0;
    for (auto a : cuts)
        for (i64 q = 1; q <= qmax; ++q) {
            auto dk = counting::delta_kappa(q, a, sieve);
            if (!dk.holds()) ++bad;
            if (abs(dk.kappa) > sieve.dcount(q)) ++bound_bad;
        }
    return {{"delta-kappa", bad == 0, "q <= " + std::to_string(qmax) + ", " + std::to_string(cuts.size()) + " cuts, " + std::to_string(bad) + " failures",
             "delta(q) = alpha phi(q) + kappa(q)"},
            {"kappa-divisor-bound", bound_bad == 0, std::to_string(bound_bad) + " violations", "|kappa(q)| <= d(q)"}};
}

/// Inversion equivalence for coprime 2 <= p, q <= pmax and every reduced cut with w <= min(p, q, wmax).
inline Check inversion_suite(i64 pmax, i64 wmax) {
    std::vector<ReducedFraction> cuts;
    for (i64 w = 1; w <= wmax; ++w)
        for (i64 v = 1; v <= w; ++v)
            if (std::gcd(v, w) == 1) cuts.emplace_back(v, w);
    i64 checked = 0, bad = 0;
    for (i64 p = 2; p <= pmax; ++p)
        for (i64 q = 2; q <= pmax; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const i64 lim = std::min(p, q);
            for (auto a : cuts) {
                if (a.den() > lim) continue;
                auto e = counting::inversion_equiv(p, q, a);
                ++checked;
                if (!e || !e->holds()) ++bad;
            }
        }
    return {"inversion-equivalence", bad == 0, std::to_string(checked) + " triples, " + std::to_string(bad) + " failures",
            "inv_p(q) <= alpha p  iff  inv_q(p) > (1 - alpha) q"};
}

inline Check moebius_suite(const std::vector<i64>& Qs, const std::vector<ReducedFraction>& cuts) {
    i64 top = 1;
    for (i64 Q : Qs) top = std::max(top, Q);
    SieveTables sieve(top);
    std::string detail;
    bool ok = true;
    for (i64 Q : Qs)
        for (auto a : cuts) {
            auto id = counting::moebius_cut_identity(Q, a, sieve);
            if (!id.holds()) {
                ok = false;
                detail += "Q=" + std::to_string(Q) + " alpha=" + a.str() + ": " + std::to_string(id.lhs) + " != " +
                          std::to_string(id.rhs) + "; ";
            }
        }
    if (ok) detail = "Q in {" + join(Qs) + "}, " + std::to_string(cuts.size()) + " cuts, all exact";
    return {"moebius-identity", ok, detail, "sum mu(d) N(Q/d) = sum of l over the cut"};
}

/// r1 + ... + r5 = R(U^2); `nested` optionally supplies an independent R for small Q.
inline std::vector<Check> case_partition_suite(const std::vector<i64>& Us, const std::vector<ReducedFraction>& cuts,
                                               i64 nested_qmax = 0,
                                               const std::function<i64(i64, ReducedFraction)>& nested = {}) {
    std::vector<Check> out;
    bool ok = true;
    std::string detail;
    for (i64 U : Us)
        for (auto a : cuts) {
            auto c = counting::count_R_cases(U, a);
            i64 r = counting::count_R(U * U, a).value;
            if (c.sum() != r) {
                ok = false;
                detail += "U=" + std::to_string(U) + " alpha=" + a.str() + "; ";
            }
        }
    if (ok) detail = "U in {" + join(Us) + "}, all exact";
    out.push_back({"case-partition", ok, detail, "five size cases partition the four-variable count"});
    if (nested) {
        i64 bad = 0;
        for (i64 Q = 1; Q <= nested_qmax; ++Q)
            for (auto a : cuts)
                if (counting::count_R(Q, a).value != nested(Q, a)) ++bad;
        out.push_back({"closed-inner-loop", bad == 0,
                       "Q <= " + std::to_string(nested_qmax) + ", " + std::to_string(bad) + " mismatches against nested loops",
                       "closed-form (k, n) count = nested enumeration"});
    }
    return out;
}

/// |N - T|/Q^2 and |N - R|/Q^2 against 2 l(alpha) + 5.
inline Check gap_suite(const std::vector<i64>& Qs, const std::vector<ReducedFraction>& cuts) {
    bool ok = true;
    double worst = 0;
    for (i64 Q : Qs)
        for (auto a : cuts) {
            const double bound = 2.0 * static_cast<double>(cf::ell_length(a)) + 5.0;
            const double n = static_cast<double>(counting::count_N(Q, a).value);
            const double t = static_cast<double>(counting::count_T(Q, a).value);
            const double r = static_cast<double>(counting::count_R(Q, a).value);
            const double q2 = static_cast<double>(Q) * Q;
            double g = std::max(std::fabs(n - t), std::fabs(n - r)) / q2;
            worst = std::max(worst, g / bound);
            if (g > bound) ok = false;
        }
    return {"system-gaps", ok, "max gap/Q^2 as a fraction of 2 l(alpha) + 5: " + fmt(worst),
            "N - T and N - R are O(l(alpha) Q^2)"};
}

inline std::vector<Check> constants_suite() {
    std::vector<Check> out;
    const double pi = std::numbers::pi;
    const auto& c = asym::fundamental_constants();
    double h = std::fabs(asym::hurwitz_zeta2(0.5) - pi * pi / 2);
    out.push_back({"hurwitz-half", h < 1e-10, "|zeta(2,1/2) - pi^2/2| = " + fmt(h), "zeta(2,1/2) = pi^2/2"});
    double worst = 0;
    for (i64 w = 1; w <= 50; ++w) {
        asym::real total = 0;
        for (i64 r = 1; r <= w; ++r) total += asym::hurwitz_zeta2(r, w);
        worst = std::max(worst, static_cast<double>(std::fabs(total - static_cast<asym::real>(w * w) * c.zeta2)));
    }
    out.push_back({"multiplication-theorem", worst < 1e-10, "max error for w <= 50: " + fmt(worst),
                   "sum_r zeta(2, r/w) = w^2 zeta(2)"});
    const bool stable = c.euler_gamma_spread < 1e-12 && c.zeta_prime2_spread < 1e-12;
    out.push_back({"truncation-stability", stable,
                   "gamma spread " + fmt(c.euler_gamma_spread) + ", zeta'(2) spread " + fmt(c.zeta_prime2_spread),
                   c.provenance});
    double f_worst = 0;
    for (auto a : identity_cuts()) {
        const double w = static_cast<double>(a.den());
        const double lhs = a.to_double() * asym::F_alpha(a) +
                           (a.num() == a.den() ? 0.0 : a.complement().to_double() * asym::F_alpha(a.complement()));
        f_worst = std::max(f_worst, std::fabs(lhs - c.zeta2 * (1 - 1 / (w * w))));
    }
    out.push_back({"F-complement", f_worst < 1e-9, "max error " + fmt(f_worst),
                   "alpha F(alpha) + (1-alpha) F(1-alpha) = zeta(2)(1 - 1/w^2)"});
    auto [C1, C2] = asym::full_interval_coefficients();
    auto [c2, c1] = asym::ell_coefficients({1, 1});
    double ce = std::max(std::fabs(C1 - c2), std::fabs(C2 - c1));
    out.push_back({"full-interval-coefficients", ce < 1e-9,
                   "C1 = " + fmt(C1, 12) + ", C2 = " + fmt(C2, 12) + ", max difference " + fmt(ce),
                   "ell-cut at alpha = 1 reduces to C1 log^2 Q + C2 log Q"});
    return out;
}

/// Least-squares slope of the mean Dedekind sum over the cut against log Q.
inline Check dedekind_slope_check(ReducedFraction alpha, const std::vector<i64>& grid, double tolerance, int workers = 1) {
    auto rows = asym::residual_table(farey::Statistic::dedekind_s, alpha, grid, farey::Side::lower, workers);
    std::vector<double> xs, ys;
    for (const auto& r : rows) {
        xs.push_back(std::log(static_cast<double>(r.Q)));
        ys.push_back(r.mean);
    }
    const double slope = asym::fit_slope(xs, ys);
    const double w = static_cast<double>(alpha.den());
    const double target = (1 - 1 / (w * w)) / 12;
    const bool ok = std::fabs(slope - target) <= tolerance * target;
    return {"dedekind-slope alpha=" + alpha.str(), ok,
            "slope " + fmt(slope) + " vs " + fmt(target) + " (rel err " + fmt(std::fabs(slope / target - 1), 3) +
                ", tol " + fmt(tolerance) + ") on grid " + join(grid),
            "dedekind-cut: (1/12)(1 - 1/w^2) log Q"};
}

/// |mean l - prediction| / E(alpha) <= limit over the grid.
inline Check ell_residual_check(ReducedFraction alpha, const std::vector<i64>& grid, double limit, int workers = 1) {
    auto rows = asym::residual_table(farey::Statistic::ell, alpha, grid, farey::Side::lower, workers);
    double worst = 0;
    std::string detail;
    for (const auto& r : rows) {
        double scaled = std::fabs(*r.residual) / *r.error_scale;
        worst = std::max(worst, scaled);
        detail += "Q=" + std::to_string(r.Q) + ": " + fmt(*r.residual, 4) + "/" + fmt(*r.error_scale, 4) + "; ";
    }
    return {"ell-residual alpha=" + alpha.str(), worst <= limit, detail + "max " + fmt(worst, 4) + " <= " + fmt(limit),
            "ell-cut: lower, two-term"};
}

/// For alpha = 1 the residual changes by at most `limit` between consecutive grid points.
inline Check ell_residual_drift_check(const std::vector<i64>& grid, double limit, int workers = 1) {
    auto rows = asym::residual_table(farey::Statistic::ell, {1, 1}, grid, farey::Side::lower, workers);
    double worst = 0;
    std::string detail;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        detail += "Q=" + std::to_string(rows[i].Q) + " res " + fmt(*rows[i].residual, 5) + "; ";
        if (i) worst = std::max(worst, std::fabs(*rows[i].residual - *rows[i - 1].residual));
    }
    return {"ell-residual-drift alpha=1", worst <= limit, detail + "max step " + fmt(worst, 4) + " <= " + fmt(limit),
            "full interval: C1 log^2 Q + C2 log Q + C3"};
}

inline Check pomi_check(const std::vector<i64>& primes, const std::vector<ReducedFraction>& cuts) {
    bool ok = true;
    std::string detail;
    for (i64 p : primes)
        for (auto a : cuts) {
            auto r = counting::pomi_deviation(p, a, 1, static_cast<double>(p), counting::Tail::lower);
            const double bound = 3.0 * (2.0 * static_cast<double>(p)) / std::pow(static_cast<double>(p), 0.4);
            if (std::fabs(r.deviation) > bound) ok = false;
            detail += "p=" + std::to_string(p) + " alpha=" + a.str() + " dev " + fmt(r.deviation, 4) + "/" + fmt(bound, 4) + "; ";
        }
    return {"inverse-distribution", ok, detail, "inverses equidistribute in [0, alpha p]"};
}

inline std::vector<Check> tail_checks(const std::vector<i64>& grid, double limit) {
    bool ok = true, monotone = true;
    std::string detail, ratios;
    double prev = -1;
    for (i64 Q : grid) {
        auto t = asym::tail_experiment(Q);
        if (std::fabs(t.normalized_scaled) > limit) ok = false;
        detail += "Q=" + std::to_string(Q) + ": " + fmt(t.normalized_scaled, 4) + "; ";
        ratios += "Q=" + std::to_string(Q) + ": " + fmt(t.bound_ratio, 4) + "; ";
        if (prev >= 0 && t.bound_ratio > prev) monotone = false;
        prev = t.bound_ratio;
    }
    return {{"tail-normalized", ok, detail + "limit " + fmt(limit), "tail mean of s(a,b) = (1/12) log Q + O(log log Q)"},
            {"tail-bound-ratio", monotone, ratios + "non-increasing required", "|sum s(b,a)| << Q^2 log^2 Q / g(Q)^2"}};
}

/// Trend and sandwich gates for the all-ones expansion.
inline std::vector<Check> irrational_checks(const std::vector<i64>& grid, double trend_tolerance, int workers = 1) {
    std::vector<i64> ones(60, 1);
    auto rows = asym::irrational_experiment(ones, grid, true, workers);
    std::vector<Check> out;
    std::string detail;
    bool sandwich = true;
    for (const auto& r : rows) {
        // Delta(beta, beta') <= 12 mean s + slack <= Delta(beta', beta) + slack
        bool lo = r.delta_lower <= r.twelve_mean_s + r.slack;
        bool hi = r.twelve_mean_s + r.slack <= r.delta_upper + r.slack;
        sandwich = sandwich && lo && hi;
        detail += "Q=" + std::to_string(r.Q) + " [" + fmt(r.delta_lower, 5) + ", " + fmt(r.twelve_mean_s, 5) + ", " +
                  fmt(r.delta_upper, 5) + "] slack " + fmt(r.slack, 4) + "; ";
    }
    out.push_back({"convergent-sandwich", sandwich, detail, "Delta(beta, beta') <= Delta(alpha, alpha) <= Delta(beta', beta)"});
    std::string trend;
    for (const auto& r : rows) trend += "Q=" + std::to_string(r.Q) + " ratio " + fmt(r.ratio, 5) + "; ";
    const double first = std::fabs(rows.front().ratio - 1), last = std::fabs(rows.back().ratio - 1);
    const bool ok = last <= first && last <= trend_tolerance;
    out.push_back({"irrational-trend", ok, trend + "|ratio - 1| <= " + fmt(trend_tolerance) + " at the top and shrinking",
                   "12 mean s / log Q -> 1 for almost every alpha"});
    return out;
}

}  // namespace dlab::suites
