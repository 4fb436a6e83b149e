#pragma once

// Counters for the Diophantine systems behind the sum of minus-CF lengths,
// and the exact identities that connect them (Moebius inversion, the
// delta/kappa decomposition, the inversion trick, and inverse-distribution
// deviations).

#include "dedekind_lab/contfrac.hpp"
#include "dedekind_lab/core_arith.hpp"
#include "dedekind_lab/farey.hpp"

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string_view>

namespace dlab::counting {

enum class Method { direct_sum, eight_var, four_var, case_split };

inline std::string_view to_string(Method m) {
    switch (m) {
        case Method::direct_sum: return "direct-sum";
        case Method::eight_var: return "eight-var";
        case Method::four_var: return "four-var";
        case Method::case_split: return "case-split";
    }
    return "?";
}

struct SystemCount {
    i64 Q = 0;
    ReducedFraction alpha{1, 1};
    i64 value = 0;
    Method method = Method::direct_sum;
};

/// Five-way split of the four-variable count at Q = U^2.
struct CaseSplit {
    i64 U = 0;
    ReducedFraction alpha{1, 1};
    std::array<i64, 5> r{};
    i64 sum() const noexcept { return r[0] + r[1] + r[2] + r[3] + r[4]; }
};

inline constexpr i64 kEightVarGuard = 60;
inline constexpr i64 kCaseSplitGuard = 100;

inline void require_cut(ReducedFraction alpha) {
    if (alpha.num() <= 0 || alpha > ReducedFraction(1, 1))
        throw std::domain_error("cut " + alpha.str() + " is outside (0, 1]");
}

/// N_alpha(Q): sum of l(a/b) over all pairs 1 <= a < alpha b, b <= Q (a/b not necessarily reduced).
inline SystemCount count_N(i64 Q, ReducedFraction alpha) {
    require_cut(alpha);
    i64 total = 0;
    for (i64 b = 1; b <= Q; ++b) {
        for (i64 a = 1; lt_scaled(a, alpha, b); ++a) {
            i64 g = std::gcd(a, b);
            total += cf::ell_length_raw(a / g, b / g);
        }
    }
    return {Q, alpha, total, Method::direct_sum};
}

/// T_alpha(Q): solutions (a1, q1, a2, q2, m, n, a, b) of
///   a1 q2 - a2 q1 = 1,  1 <= a1 <= alpha q1,  1 <= a2 <= q2,
///   n a2 - m a1 = a,  n q2 - m q1 = b,  1 <= a < b <= Q,  1 <= m < n,  1 <= q1 < q2.
/// The determinant fixes a1 = inv_{q1}(q2) (or 1 when q1 = 1), so only (q1, q2, m, n) are enumerated.
inline SystemCount count_T(i64 Q, ReducedFraction alpha) {
    require_cut(alpha);
    if (Q > kEightVarGuard)
        throw budget_error("count_T: Q = " + std::to_string(Q) + " exceeds the guard Q <= " +
                           std::to_string(kEightVarGuard));
    i64 total = 0;
    for (i64 q1 = 1; q1 <= Q; ++q1) {
        for (i64 q2 = q1 + 1; q2 <= Q; ++q2) {
            if (std::gcd(q1, q2) != 1) continue;
            i64 a1 = (q1 == 1) ? 1 : mod_inverse(q2, q1);
            if (!le_scaled(a1, alpha, q1)) continue;
            i64 a2 = (a1 * q2 - 1) / q1;
            if (a2 < 1 || a2 > q2) continue;
            // b >= q2 + (n - 1)(q2 - q1) bounds n
            for (i64 n = 2; q2 + (n - 1) * (q2 - q1) <= Q; ++n) {
                for (i64 m = 1; m < n; ++m) {
                    i64 b = n * q2 - m * q1;
                    if (b > Q) continue;
                    i64 a = n * a2 - m * a1;
                    if (a >= 1 && a < b) ++total;
                }
            }
        }
    }
    return {Q, alpha, total, Method::eight_var};
}

namespace detail {

/// Pairs 1 <= k < n with n q + k p <= Q, split at n <= split_n.
struct PairCount {
    i64 low = 0;   // n <= split_n
    i64 high = 0;  // n > split_n
};

inline PairCount count_kn(i64 p, i64 q, i64 Q, i64 split_n) {
    PairCount out;
    for (i64 k = 1; (k + 1) * q + k * p <= Q; ++k) {
        i64 n_max = (Q - k * p) / q;  // n ranges over k+1 .. n_max
        i64 lo_end = std::min(n_max, split_n);
        if (lo_end >= k + 1) out.low += lo_end - k;
        i64 hi_start = std::max(k + 1, split_n + 1);
        if (n_max >= hi_start) out.high += n_max - hi_start + 1;
    }
    return out;
}

template <typename Visit>
void for_each_admissible_pair(i64 Q, ReducedFraction alpha, Visit&& visit) {
    // the smallest term (k, n) = (1, 2) needs 2q + p <= Q
    for (i64 p = 2; p + 2 <= Q; ++p) {
        for (i64 q = 1; 2 * q + p <= Q; ++q) {
            if (std::gcd(p, q) != 1) continue;
            if (!le_scaled(mod_inverse(q, p), alpha, p)) continue;
            visit(p, q);
        }
    }
}

}  // namespace detail

/// R_alpha(Q): solutions (p, q, n, k) of gcd(p, q) = 1, p >= 2, q >= 1,
/// 2 <= n q + k p <= Q, 1 <= k < n, inv_p(q) <= alpha p. The (k, n) count is
/// closed form per k.
inline SystemCount count_R(i64 Q, ReducedFraction alpha) {
    require_cut(alpha);
    i64 total = 0;
    detail::for_each_admissible_pair(Q, alpha, [&](i64 p, i64 q) {
        auto c = detail::count_kn(p, q, Q, Q);
        total += c.low + c.high;
    });
    return {Q, alpha, total, Method::four_var};
}

/// R_alpha(U^2) split into the five size cases:
///   1: p <= q <= U   2: p <= q, U < q   3: q < p <= U
///   4: q < p, U < p, n <= U   5: q < p, U < p, U < n
inline CaseSplit count_R_cases(i64 U, ReducedFraction alpha) {
    require_cut(alpha);
    if (U > kCaseSplitGuard)
        throw budget_error("count_R_cases: U = " + std::to_string(U) + " exceeds the guard U <= " +
                           std::to_string(kCaseSplitGuard));
    CaseSplit out;
    out.U = U;
    out.alpha = alpha;
    const i64 Q = U * U;
    detail::for_each_admissible_pair(Q, alpha, [&](i64 p, i64 q) {
        auto c = detail::count_kn(p, q, Q, U);
        const i64 all = c.low + c.high;
        if (p <= q)
            out.r[q <= U ? 0 : 1] += all;
        else if (p <= U)
            out.r[2] += all;
        else {
            out.r[3] += c.low;
            out.r[4] += c.high;
        }
    });
    return out;
}

struct IdentityPair {
    i64 lhs = 0;
    i64 rhs = 0;
    bool holds() const noexcept { return lhs == rhs; }
};

/// lhs = sum_{d <= Q} mu(d) N_alpha(floor(Q/d)), rhs = sum of l(x) over F_alpha(Q).
inline IdentityPair moebius_cut_identity(i64 Q, ReducedFraction alpha, const SieveTables& sieve) {
    require_cut(alpha);
    if (sieve.limit() < Q) throw std::domain_error("moebius_cut_identity: sieve does not cover Q");
    std::map<i64, i64> n_cache;
    IdentityPair out;
    for (i64 d = 1; d <= Q; ++d) {
        int mu = sieve.mu(d);
        if (mu == 0) continue;
        i64 m = Q / d;
        auto it = n_cache.find(m);
        if (it == n_cache.end()) it = n_cache.emplace(m, count_N(m, alpha).value).first;
        out.lhs += mu * it->second;
    }
    auto total = farey::aggregate_range(farey::to_range({Q, alpha, farey::Side::lower}), farey::Statistic::ell);
    out.rhs = total.total.get_num().get_si();
    return out;
}

/// (1 - {alpha r}) scaled by w, for alpha = v/w: w - (v r mod w).
constexpr i64 weight_scaled(ReducedFraction alpha, i64 r) noexcept {
    return alpha.den() - mod_floor(alpha.num() * r, alpha.den());
}

struct DeltaKappa {
    i64 delta = 0;
    ExactRational kappa = 0;
    ExactRational alpha_phi = 0;
    bool holds() const { return delta == alpha_phi + kappa; }
};

/// delta = #{p coprime to q : (1 - alpha) q < p <= q};
/// kappa = sum_{1 <= r < w} (1 - {alpha r}) sum_{d | q, d = r mod w} mu(q/d).
inline DeltaKappa delta_kappa(i64 q, ReducedFraction alpha, const SieveTables& sieve) {
    require_cut(alpha);
    if (q < 1 || q > sieve.limit()) throw std::domain_error("delta_kappa: q outside the sieve range");
    const i64 v = alpha.num(), w = alpha.den();
    DeltaKappa out;
    for (i64 p = 1; p <= q; ++p) {
        // p > (1 - alpha) q  <=>  p w > (w - v) q
        if (static_cast<i128>(p) * w > static_cast<i128>(w - v) * q && std::gcd(p, q) == 1) ++out.delta;
    }
    i64 kappa_scaled = 0;
    auto add_divisor = [&](i64 div) {
        i64 r = div % w;
        if (r != 0) kappa_scaled += weight_scaled(alpha, r) * sieve.mu(q / div);
    };
    for (i64 d = 1; d * d <= q; ++d) {
        if (q % d != 0) continue;
        add_divisor(d);
        if (d != q / d) add_divisor(q / d);
    }
    out.kappa = make_rational(kappa_scaled, w);
    out.alpha_phi = make_rational(v * sieve.phi(q), w);
    return out;
}

/// w * kappa_alpha(q) for every q <= limit, by a divisor sieve.
inline std::vector<i64> kappa_scaled_table(i64 limit, ReducedFraction alpha, const SieveTables& sieve) {
    require_cut(alpha);
    if (sieve.limit() < limit) throw std::domain_error("kappa_scaled_table: sieve does not cover the limit");
    std::vector<i64> table(static_cast<std::size_t>(limit) + 1, 0);
    for (i64 d = 1; d <= limit; ++d) {
        i64 r = d % alpha.den();
        if (r == 0) continue;
        i64 wgt = weight_scaled(alpha, r);
        for (i64 m = 1; d * m <= limit; ++m) {
            int mu = sieve.mu(m);
            if (mu != 0) table[static_cast<std::size_t>(d * m)] += wgt * mu;
        }
    }
    return table;
}

struct Equivalence {
    bool lhs = false;  // inv_p(q) <= alpha p
    bool rhs = false;  // inv_q(p) > (1 - alpha) q
    bool holds() const noexcept { return lhs == rhs; }
};

/// Both sides of the inversion equivalence; nullopt when the hypothesis
/// (coprime p, q >= 2 and w <= p or w <= q) does not hold.
inline std::optional<Equivalence> inversion_equiv(i64 p, i64 q, ReducedFraction alpha) {
    require_cut(alpha);
    const i64 v = alpha.num(), w = alpha.den();
    if (p < 2 || q < 2 || std::gcd(p, q) != 1) return std::nullopt;
    if (w > p && w > q) return std::nullopt;
    Equivalence e;
    e.lhs = le_scaled(mod_inverse(q, p), alpha, p);
    e.rhs = static_cast<i128>(mod_inverse(p, q)) * w > static_cast<i128>(w - v) * q;
    return e;
}

enum class Tail { lower, upper };

struct PomiResult {
    i64 count = 0;
    double main = 0.0;
    double deviation = 0.0;
};

/// Counts integers q in [X1, X2] coprime to p with inv_p(q) <= alpha p (lower tail)
/// or inv_p(q) > (1 - alpha) p (upper tail). The main term is alpha phi(p)/p times
/// the number of integers in the window.
inline PomiResult pomi_deviation(i64 p, ReducedFraction alpha, double X1, double X2, Tail tail) {
    require_cut(alpha);
    if (p < 2) throw std::domain_error("pomi_deviation: p must be >= 2");
    if (!(X1 >= 0.0) || !(X2 > X1)) throw std::domain_error("pomi_deviation: need 0 <= X1 < X2");
    const i64 v = alpha.num(), w = alpha.den();
    const i64 lo = static_cast<i64>(std::ceil(X1)), hi = static_cast<i64>(std::floor(X2));
    PomiResult out;
    i64 phi = 0;
    for (i64 r = 1; r <= p; ++r)
        if (std::gcd(r, p) == 1) ++phi;
    for (i64 q = std::max<i64>(lo, 1); q <= hi; ++q) {
        if (std::gcd(q, p) != 1) continue;
        i64 inv = mod_inverse(q, p);
        bool hit = (tail == Tail::lower) ? le_scaled(inv, alpha, p)
                                         : static_cast<i128>(inv) * w > static_cast<i128>(w - v) * p;
        if (hit) ++out.count;
    }
    const double window = static_cast<double>(std::max<i64>(hi - lo + 1, 0));
    out.main = alpha.to_double() * static_cast<double>(phi) / static_cast<double>(p) * window;
    out.deviation = static_cast<double>(out.count) - out.main;
    return out;
}

}  // namespace dlab::counting
