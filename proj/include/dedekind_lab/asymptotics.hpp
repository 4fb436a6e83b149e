#pragma once

// Analytic constants, two-term predictions for Farey-cut averages, and the
// numerical experiments that compare them against exact totals.

#include "dedekind_lab/contfrac.hpp"
#include "dedekind_lab/core_arith.hpp"
#include "dedekind_lab/counting.hpp"
#include "dedekind_lab/dedekind.hpp"
#include "dedekind_lab/farey.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dlab::asym {

using real = long double;

namespace detail {

// B_2, B_4, ..., B_20
inline constexpr std::array<real, 10> kBernoulliEven = {
    1.0L / 6,       -1.0L / 30,          1.0L / 42,     -1.0L / 30,      5.0L / 66,
    -691.0L / 2730, 7.0L / 6,            -3617.0L / 510, 43867.0L / 798, -174611.0L / 330,
};

inline real factorial(int n) {
    real f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Euler-Maclaurin estimate of gamma from the harmonic number H_N.
inline real euler_gamma_at(long N, int terms = 8) {
    real h = 0;
    for (long n = N; n >= 1; --n) h += 1.0L / n;
    real g = h - std::log(static_cast<real>(N)) - 1.0L / (2.0L * N);
    real pow = static_cast<real>(N) * N;
    for (int k = 1; k <= terms; ++k) {
        g += kBernoulliEven[k - 1] / (2.0L * k * pow);
        pow *= static_cast<real>(N) * N;
    }
    return g;
}

/// -sum_{n >= 1} log(n)/n^2: direct terms below N plus an Euler-Maclaurin tail.
inline real zeta_prime2_at(long N, int terms = 8) {
    real s = 0;
    for (long n = N - 1; n >= 2; --n) s += std::log(static_cast<real>(n)) / (static_cast<real>(n) * n);
    const real x = N, lx = std::log(x);
    real tail = (lx + 1) / x + lx / (2 * x * x);
    // f^(j)(x) = x^(-2-j) (A log x + B)
    real A = 1, B = 0;
    int s_exp = 2;
    for (int j = 1; j <= 2 * terms - 1; ++j) {
        real A_next = -s_exp * A, B_next = A - s_exp * B;
        A = A_next;
        B = B_next;
        ++s_exp;
        if (j % 2 == 1) {
            int k = (j + 1) / 2;
            real deriv = std::pow(x, -static_cast<real>(s_exp)) * (A * lx + B);
            tail -= kBernoulliEven[k - 1] / factorial(2 * k) * deriv;
        }
    }
    return -(s + tail);
}

inline real hurwitz_zeta2_at(real x, long N, int terms = 8) {
    real s = 0;
    for (long n = N - 1; n >= 0; --n) s += 1.0L / ((n + x) * (n + x));
    const real y = N + x;
    real tail = 1.0L / y + 1.0L / (2 * y * y);
    real pow = y * y * y;
    for (int k = 1; k <= terms; ++k) {
        tail += kBernoulliEven[k - 1] / pow;
        pow *= y * y;
    }
    return s + tail;
}

}  // namespace detail

struct ConstantSet {
    double zeta2 = 0;
    double zeta_prime2 = 0;
    double euler_gamma = 0;
    // |difference| between the two independent truncations
    double zeta_prime2_spread = 0;
    double euler_gamma_spread = 0;
    std::string provenance;
};

/// gamma and zeta'(2) each from two Euler-Maclaurin windows (N = 200 and N = 2000).
inline const ConstantSet& fundamental_constants() {
    static const ConstantSet constants = [] {
        ConstantSet c;
        const real pi = std::numbers::pi_v<real>;
        c.zeta2 = static_cast<double>(pi * pi / 6);
        real g1 = detail::euler_gamma_at(200), g2 = detail::euler_gamma_at(2000);
        real z1 = detail::zeta_prime2_at(200), z2 = detail::zeta_prime2_at(2000);
        c.euler_gamma = static_cast<double>(g2);
        c.zeta_prime2 = static_cast<double>(z2);
        c.euler_gamma_spread = static_cast<double>(std::fabs(g1 - g2));
        c.zeta_prime2_spread = static_cast<double>(std::fabs(z1 - z2));
        c.provenance =
            "zeta2 = pi^2/6; gamma from H_N - log N with Euler-Maclaurin corrections; "
            "zeta'(2) = -sum log n/n^2 with Euler-Maclaurin tail; windows N = 200 and 2000";
        return c;
    }();
    return constants;
}

/// zeta(2, x) = sum_{n >= 0} (n + x)^-2 for 0 < x <= 1.
inline double hurwitz_zeta2(double x) {
    if (!(x > 0.0) || x > 1.0) throw std::domain_error("hurwitz_zeta2: x must lie in (0, 1]");
    return static_cast<double>(detail::hurwitz_zeta2_at(static_cast<real>(x), 24));
}

/// Exact-argument variant: zeta(2, r/w) without rounding r/w first.
inline real hurwitz_zeta2(i64 r, i64 w) {
    if (r <= 0 || r > w) throw std::domain_error("hurwitz_zeta2: r/w must lie in (0, 1]");
    return detail::hurwitz_zeta2_at(static_cast<real>(r) / static_cast<real>(w), 24);
}

/// F(alpha) = (1/(alpha w^2)) sum_{r=1}^{w-1} (1 - {alpha r}) zeta(2, r/w).
inline double F_alpha(ReducedFraction alpha) {
    counting::require_cut(alpha);
    const i64 v = alpha.num(), w = alpha.den();
    real sum = 0;
    for (i64 r = 1; r < w; ++r)
        sum += static_cast<real>(counting::weight_scaled(alpha, r)) / w * hurwitz_zeta2(r, w);
    return static_cast<double>(sum * w / (static_cast<real>(v) * w * w));
}

/// C1 = 1/(2 zeta(2)), C2 = (2 gamma - 3/2 - 2 zeta'(2)/zeta(2)) / zeta(2).
inline std::pair<double, double> full_interval_coefficients() {
    const auto& c = fundamental_constants();
    return {1.0 / (2.0 * c.zeta2), (2.0 * c.euler_gamma - 1.5 - 2.0 * c.zeta_prime2 / c.zeta2) / c.zeta2};
}

/// Coefficients (c2, c1) of the predicted l-mean c2 (log Q)^2 + c1 log Q over [0, alpha).
inline std::pair<double, double> ell_coefficients(ReducedFraction alpha) {
    const auto& c = fundamental_constants();
    const double a = alpha.to_double();
    return {a / (2.0 * c.zeta2),
            a / c.zeta2 * (2.0 * c.euler_gamma - 2.0 * c.zeta_prime2 / c.zeta2 + F_alpha(alpha) - 1.5)};
}

/// E(alpha) = l(alpha) + (log w)^2.
inline double error_scale_E(ReducedFraction alpha) {
    return static_cast<double>(cf::ell_length(alpha)) + std::pow(std::log(static_cast<double>(alpha.den())), 2);
}

struct Prediction {
    ReducedFraction alpha{1, 1};
    i64 Q = 0;
    farey::Statistic statistic = farey::Statistic::ell;
    farey::Side side = farey::Side::lower;
    double main_terms = 0;
    double error_scale = 1;
    std::string provenance;
};

inline bool has_prediction(farey::Statistic stat) {
    return stat == farey::Statistic::dedekind_s || stat == farey::Statistic::ell;
}

/// Two-term main terms for the mean of `stat` over the cut. Throws
/// std::domain_error when the hypotheses of the underlying asymptotic fail.
inline Prediction predict(farey::Statistic stat, ReducedFraction alpha, i64 Q,
                          farey::Side side = farey::Side::lower) {
    counting::require_cut(alpha);
    if (Q < 2) throw std::domain_error("predict: Q must be at least 2");
    Prediction p;
    p.alpha = alpha;
    p.Q = Q;
    p.statistic = stat;
    p.side = side;
    const double logQ = std::log(static_cast<double>(Q));
    const double w = static_cast<double>(alpha.den());
    switch (stat) {
        case farey::Statistic::dedekind_s:
            if (side != farey::Side::lower)
                throw std::domain_error("predict: Dedekind-sum averages are stated for the lower cut only");
            if (alpha == ReducedFraction(1, 1)) {
                p.main_terms = 0.0;
                p.provenance = "sum of s(x) over F(Q) vanishes";
                return p;
            }
            if (alpha > ReducedFraction(1, 2))
                throw std::domain_error("predict: the Dedekind-sum cut average needs alpha in (0, 1/2], got " + alpha.str());
            p.main_terms = (1.0 - 1.0 / (w * w)) * logQ / 12.0;
            p.error_scale = 1.0;
            p.provenance = "dedekind-cut: (1/12)(1 - 1/w^2) log Q";
            return p;
        case farey::Statistic::ell: {
            const i64 w_int = alpha.den();
            if (w_int * w_int >= Q)
                throw std::domain_error("predict: the ell cut average needs w < Q^(1/2), got w = " + std::to_string(w_int) +
                                        ", Q = " + std::to_string(Q));
            auto [c2, c1] = ell_coefficients(alpha);
            p.main_terms = c2 * logQ * logQ + c1 * logQ;
            if (side == farey::Side::lower) {
                p.error_scale = std::max(1.0, error_scale_E(alpha));
                p.provenance = "ell-cut: lower, two-term";
            } else {
                if (alpha == ReducedFraction(1, 1))
                    throw std::domain_error("predict: the complement ell average needs alpha < 1");
                p.main_terms -= (1.0 - 1.0 / (w * w)) * logQ;
                p.error_scale = std::max(1.0, error_scale_E(alpha.complement()));
                p.provenance = "ell-cut: complement, two-term";
            }
            return p;
        }
        default:
            throw std::domain_error("predict: no two-term formula for statistic " +
                                    std::string(farey::to_string(stat)));
    }
}

/// Fills the prediction fields of an empirical report when a formula applies.
inline farey::AverageReport& annotate(farey::AverageReport& report) {
    if (!has_prediction(report.statistic)) return report;
    Prediction p = predict(report.statistic, report.alpha, report.Q, report.side);
    report.predicted_main = p.main_terms;
    report.residual = report.mean - p.main_terms;
    report.error_scale = p.error_scale;
    return report;
}

/// Least-squares slope of ys against xs.
inline double fit_slope(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw std::domain_error("fit_slope: need >= 2 paired points");
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline void require_grid(std::span<const i64> grid) {
    if (grid.empty()) throw std::domain_error("grid must not be empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1]) throw std::domain_error("grid must be strictly increasing");
}

/// One empirical average per grid point, annotated with its prediction when one applies.
inline std::vector<farey::AverageReport> residual_table(farey::Statistic stat, ReducedFraction alpha,
                                                        std::span<const i64> grid,
                                                        farey::Side side = farey::Side::lower, int workers = 1) {
    require_grid(grid);
    SieveTables sieve(grid.back());
    std::vector<farey::AverageReport> rows;
    for (i64 Q : grid) {
        auto report = farey::aggregate({Q, alpha, side}, stat, sieve, workers);
        annotate(report);
        rows.push_back(std::move(report));
    }
    return rows;
}

/// Delta(lower_cut, complement_cut) = (sum_{F_lower} l - sum_{F^c_complement} l) / #F(Q).
struct DeltaCuts {
    ExactRational lower_total = 0;
    ExactRational complement_total = 0;
    i64 count = 0;
    double value = 0;
};

inline DeltaCuts delta_cuts(ReducedFraction lower_cut, ReducedFraction complement_cut, i64 Q,
                            const SieveTables& sieve, int workers = 1) {
    DeltaCuts d;
    d.count = sieve.farey_count(Q);
    d.lower_total = farey::aggregate_range(farey::to_range({Q, lower_cut, farey::Side::lower}),
                                           farey::Statistic::ell, workers).total;
    d.complement_total = farey::aggregate_range(farey::to_range({Q, complement_cut, farey::Side::upper_complement}),
                                                farey::Statistic::ell, workers).total;
    d.value = ExactRational((d.lower_total - d.complement_total) / d.count).get_d();
    return d;
}

inline DeltaCuts delta_cuts(ReducedFraction lower_cut, ReducedFraction complement_cut, i64 Q, int workers = 1) {
    return delta_cuts(lower_cut, complement_cut, Q, SieveTables(Q), workers);
}

/// f(Q) = (log Q)^(1/3): the concrete slowly growing function for convergent selection.
inline double convergent_scale(i64 Q) { return std::cbrt(std::log(static_cast<double>(Q))); }

/// Smallest even N >= 2 with phi^N >= (f(Q) log Q)^(1/2).
inline std::size_t convergent_index(i64 Q) {
    const double phi = std::numbers::phi;
    const double target = std::sqrt(convergent_scale(Q) * std::log(static_cast<double>(Q)));
    std::size_t N = 1;
    while (std::pow(phi, static_cast<double>(N)) < target) ++N;
    if (N % 2 == 1) ++N;
    return N;
}

struct IrrationalRow {
    i64 Q = 0;
    std::size_t N = 0;
    ReducedFraction beta{0, 1};        // lower convergent
    ReducedFraction beta_prime{1, 1};  // upper convergent
    ReducedFraction cut{1, 1};         // rational stand-in for alpha that is exact at order Q
    i64 count = 0;
    i64 cut_count = 0;
    double delta_upper = 0;  // Delta(beta', beta)
    double delta_lower = 0;  // Delta(beta, beta')
    double twelve_mean_s = 0;
    double slack = 0;  // 5 #F_alpha(Q) / #F(Q)
    double ratio = 0;  // 12 mean_s / log Q
};

/// The cut F(Q) n [0, alpha) for alpha = [0; digits...]: the first convergent with
/// denominator > Q induces the same set, because no fraction with denominator <= Q
/// lies between alpha and that convergent. A finite expansion is used as-is.
inline ReducedFraction exact_cut_for(std::span<const i64> digits, i64 Q, bool require_irrational_precision) {
    auto conv = cf::convergents(digits);
    if (conv.empty()) throw std::domain_error("irrational_experiment: empty digit list");
    for (const auto& c : conv)
        if (c.den() > Q) return c;
    if (require_irrational_precision)
        throw std::domain_error("irrational_experiment: digits too short to resolve the cut at Q = " +
                                std::to_string(Q));
    return conv.back();
}

/// Convergent sandwich around alpha = [0; digits...] at each grid point.
/// Finite digit lists are treated as the rational they denote.
inline std::vector<IrrationalRow> irrational_experiment(std::span<const i64> digits, std::span<const i64> grid,
                                                        bool treat_as_irrational = true, int workers = 1) {
    require_grid(grid);
    SieveTables sieve(grid.back());
    auto conv = cf::convergents(digits);
    std::vector<IrrationalRow> rows;
    for (i64 Q : grid) {
        IrrationalRow row;
        row.Q = Q;
        row.count = sieve.farey_count(Q);
        row.cut = exact_cut_for(digits, Q, treat_as_irrational);
        std::size_t N = std::min(convergent_index(Q), conv.size() >= 2 ? conv.size() - 1 : std::size_t{1});
        row.N = N;
        ReducedFraction c_n = conv[N - 1];
        ReducedFraction c_n1 = conv.size() > N ? conv[N] : conv[N - 1];
        row.beta = std::min(c_n, c_n1);
        row.beta_prime = std::max(c_n, c_n1);
        auto s_total = farey::aggregate_range(farey::to_range({Q, row.cut, farey::Side::lower}),
                                              farey::Statistic::dedekind_s, workers);
        row.cut_count = s_total.cut_count;
        row.twelve_mean_s = ExactRational(12 * s_total.total / row.count).get_d();
        row.delta_upper = delta_cuts(row.beta_prime, row.beta, Q, sieve, workers).value;
        row.delta_lower = delta_cuts(row.beta, row.beta_prime, Q, sieve, workers).value;
        row.slack = 5.0 * static_cast<double>(row.cut_count) / static_cast<double>(row.count);
        row.ratio = row.twelve_mean_s / std::log(static_cast<double>(Q));
        rows.push_back(row);
    }
    return rows;
}

struct TailResult {
    i64 Q = 0;
    i64 set_size = 0;  // #S(log, Q), fractions with a >= 1
    i64 count = 0;     // #F(Q)
    ExactRational sum_sba = 0;
    ExactRational sum_sab = 0;
    double normalized = 0;         // sum_sab / #F(Q) - log(Q)/12
    double normalized_scaled = 0;  // normalized / log log Q
    double bound_ratio = 0;        // |sum_sba| g(Q)^2 / (Q^2 log^2 Q)
};

/// S(g, Q) = {a/b reduced : 1 <= a, b <= Q, a/b <= 1/g(Q)} with g = log.
/// 0/1 is left out: s(0, 1) = 0 and s(1, 0) is undefined.
inline TailResult tail_experiment(i64 Q) {
    if (Q < 3) throw std::domain_error("tail_experiment: Q must be at least 3");
    TailResult t;
    t.Q = Q;
    t.count = SieveTables(Q).farey_count(Q);
    const real g = std::log(static_cast<real>(Q));
    std::vector<i128> scaled_sab(static_cast<std::size_t>(Q) + 1, 0);
    std::vector<i64> sba_scaled;            // 6 a s(b, a) is an integer
    for (i64 b = 1; b <= Q; ++b) {
        for (i64 a = 1; static_cast<real>(a) * g <= static_cast<real>(b); ++a) {
            if (std::gcd(a, b) != 1) continue;
            ++t.set_size;
            scaled_sab[static_cast<std::size_t>(b)] += cf::hickerson_scaled(a, b);
            if (static_cast<std::size_t>(a) >= sba_scaled.size()) sba_scaled.resize(static_cast<std::size_t>(a) + 1, 0);
            ExactRational s = dedekind::dedekind_sum(b, a);
            sba_scaled[static_cast<std::size_t>(a)] += ExactRational(s * 6 * a).get_num().get_si();
        }
    }
    for (std::size_t b = 1; b < scaled_sab.size(); ++b) {
        if (scaled_sab[b] == 0) continue;
        ExactRational term(make_integer(scaled_sab[b]), make_integer(static_cast<i128>(24) * static_cast<i128>(b)));
        term.canonicalize();
        t.sum_sab += term;
    }
    for (std::size_t a = 1; a < sba_scaled.size(); ++a) {
        if (sba_scaled[a] == 0) continue;
        t.sum_sba += make_rational(sba_scaled[a], 6 * static_cast<i64>(a));
    }
    const double logQ = std::log(static_cast<double>(Q));
    t.normalized = ExactRational(t.sum_sab / t.count).get_d() - logQ / 12.0;
    t.normalized_scaled = t.normalized / std::log(logQ);
    t.bound_ratio = std::fabs(t.sum_sba.get_d()) * logQ * logQ / (static_cast<double>(Q) * Q * logQ * logQ);
    return t;
}

struct HarmonicRow {
    std::string name;
    std::string provenance;
    double lhs = 0;
    double rhs = 0;
    double residual = 0;
    double scaled = 0;
    std::string scale;
};

/// Exact-from-sieve left sides against the asymptotic right sides of the
/// totient sums (q < x) and the k + q < U double sums (U = x).
inline std::vector<HarmonicRow> harmonic_residuals(i64 x, ReducedFraction alpha = {1, 3}) {
    if (x < 10) throw std::domain_error("harmonic_residuals: x must be at least 10");
    counting::require_cut(alpha);
    const auto& c = fundamental_constants();
    SieveTables sieve(x);
    const real X = static_cast<real>(x), lx = std::log(X);
    real s_phi = 0, s_phi_q = 0, s_phi_q2 = 0, s_phi_log = 0, s_kappa = 0;
    auto kappa = counting::kappa_scaled_table(x, alpha, sieve);
    for (i64 q = x - 1; q >= 1; --q) {
        const real phi = static_cast<real>(sieve.phi(q)), Rq = static_cast<real>(q);
        s_phi += phi;
        s_phi_q += phi / Rq;
        s_phi_q2 += phi / (Rq * Rq);
        s_phi_log += phi * std::log(Rq) / (Rq * Rq);
        s_kappa += static_cast<real>(kappa[static_cast<std::size_t>(q)]) / alpha.den() / (Rq * Rq);
    }
    // double sums over k + q < U: for fixed q, k runs over 1..U-1-q
    const i64 U = x;
    real d1 = 0, d2 = 0, d3 = 0, d4 = 0, d5 = 0;
    std::vector<real> harmonic(static_cast<std::size_t>(U) + 1, 0);
    for (i64 k = 1; k <= U; ++k) harmonic[static_cast<std::size_t>(k)] = harmonic[static_cast<std::size_t>(k - 1)] + 1.0L / k;
    for (i64 q = U - 2; q >= 1; --q) {
        const i64 K = U - 1 - q;
        const real phi = static_cast<real>(sieve.phi(q)), Rq = static_cast<real>(q);
        const real H = harmonic[static_cast<std::size_t>(K)], Kr = static_cast<real>(K);
        d1 += phi / (Rq * Rq) * H;
        d2 += phi / (Rq * Rq) * Kr;
        d3 += phi / Rq * H;
        d4 += phi / (Rq * Rq) * Kr * (Kr + 1) / 2;
        d5 += phi * H;
    }
    const real z2 = c.zeta2, zp = c.zeta_prime2, gam = c.euler_gamma;
    const real lU = std::log(static_cast<real>(U)), Ur = static_cast<real>(U);
    real kappa_limit = static_cast<real>(alpha.to_double()) * F_alpha(alpha) / z2;
    auto row = [](std::string name, std::string prov, real lhs, real rhs, real scale_factor, std::string scale) {
        HarmonicRow r{std::move(name), std::move(prov), static_cast<double>(lhs), static_cast<double>(rhs), 0, 0,
                      std::move(scale)};
        r.residual = static_cast<double>(lhs - rhs);
        r.scaled = static_cast<double>((lhs - rhs) * scale_factor);
        return r;
    };
    std::vector<HarmonicRow> rows;
    rows.push_back(row("sum phi(q)", "totient-sum", s_phi, X * X / (2 * z2), 1 / (X * lx), "residual/(x log x)"));
    rows.push_back(row("sum phi(q)/q", "totient-sum", s_phi_q, X / z2, 1 / lx, "residual/log x"));
    rows.push_back(row("sum phi(q)/q^2", "totient-sum", s_phi_q2, (lx + gam - zp / z2) / z2, X / lx,
                       "residual*x/log x"));
    rows.push_back(row("sum phi(q) log q/q^2", "totient-sum", s_phi_log, lx * lx / (2 * z2), 1, "residual"));
    rows.push_back(row("sum kappa(q)/q^2 [alpha=" + alpha.str() + "]", "kappa-sum", s_kappa, kappa_limit,
                       X / lx, "residual*x/log x"));
    rows.push_back(row("sum_{k+q<U} phi(q)/(k q^2)", "double-sum", d1, lU * lU / z2 + lU / z2 * (2 * gam - zp / z2), 1,
                       "residual"));
    rows.push_back(row("sum_{k+q<U} phi(q)/q^2", "double-sum", d2, Ur * lU / z2, 1 / Ur, "residual/U"));
    rows.push_back(row("sum_{k+q<U} phi(q)/(q k)", "double-sum", d3, Ur * lU / z2, 1 / Ur, "residual/U"));
    rows.push_back(row("sum_{k+q<U} phi(q) k/q^2", "double-sum", d4, Ur * Ur * lU / (2 * z2), 1 / (Ur * Ur),
                       "residual/U^2"));
    rows.push_back(row("sum_{k+q<U} phi(q)/k", "double-sum", d5, Ur * Ur * lU / (2 * z2), 1 / (Ur * Ur), "residual/U^2"));
    return rows;
}

/// Mass sum_{k < a, gcd(k, a) = 1} |s(k, a)| / (a log^2 a).
inline double dedekind_mass_ratio(i64 a) {
    if (a < 2) throw std::domain_error("dedekind_mass_ratio: a must be at least 2");
    i64 scaled = 0;
    for (i64 k = 1; k < a; ++k) {
        if (std::gcd(k, a) != 1) continue;
        i64 v = cf::hickerson_scaled(k, a);
        scaled += v < 0 ? -v : v;
    }
    const double la = std::log(static_cast<double>(a));
    return static_cast<double>(scaled) / (24.0 * a) / (a * la * la);
}

}  // namespace dlab::asym
