#pragma once

// Brute-force reference implementations used only by the test suites. None of
// these share code paths with the library routines they check.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

struct Frac {
    i64 num;
    i64 den;
};

/// Every reduced v/w in [0, 1] with w <= Q, sorted by value.
inline std::vector<Frac> farey_sorted(i64 Q) {
    std::vector<Frac> out;
    for (i64 w = 1; w <= Q; ++w)
        for (i64 v = 0; v <= w; ++v)
            if (std::gcd(v, w) == 1) out.push_back({v, w});
    std::sort(out.begin(), out.end(), [](Frac a, Frac b) { return a.num * b.den < b.num * a.den; });
    return out;
}

/// Modular inverse by exhaustive search, least positive representative.
inline i64 inverse_by_search(i64 a, i64 q) {
    if (q == 1) return 1;
    i64 r = ((a % q) + q) % q;
    for (i64 x = 1; x <= q; ++x)
        if ((r * x) % q == 1) return x;
    return -1;
}

/// By-excess digits computed on mpq values: b_i = ceil(y_i), y_{i+1} = 1/(b_i - y_i).
inline std::vector<i64> minus_digits_rational(i64 a, i64 b) {
    std::vector<i64> out;
    if (a == b) return out;
    mpq_class y(b, b - a);
    y.canonicalize();
    for (;;) {
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
        out.push_back(c.get_si());
        if (y == mpq_class(c)) break;
        y = 1 / (mpq_class(c) - y);
    }
    return out;
}

/// Sawtooth ((x)) of a rational, as mpq.
inline mpq_class sawtooth(const mpq_class& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    mpq_class frac = x - mpq_class(fl);
    if (frac == 0) return 0;
    return frac - mpq_class(1, 2);
}

/// s(a, b) straight from the definition, one mpq term at a time.
inline mpq_class dedekind_definition(i64 a, i64 b) {
    mpq_class total = 0;
    for (i64 n = 1; n <= b; ++n) {
        mpq_class x(n, b), y(n * a, b);
        x.canonicalize();
        y.canonicalize();
        total += sawtooth(x) * sawtooth(y);
    }
    return total;
}

/// R_alpha(Q) by nested loops over p, q, n, k, with alpha = v/w.
inline i64 count_R_nested(i64 Q, i64 v, i64 w) {
    i64 c = 0;
    for (i64 p = 2; p <= Q; ++p)
        for (i64 q = 1; q <= Q; ++q) {
            if (std::gcd(p, q) != 1) continue;
            if (inverse_by_search(q, p) * w > v * p) continue;
            for (i64 n = 2; n <= Q; ++n)
                for (i64 k = 1; k < n; ++k) {
                    i64 t = n * q + k * p;
                    if (t >= 2 && t <= Q) ++c;
                }
        }
    return c;
}

/// The five case counts of R_alpha(U^2) by nested loops.
inline std::vector<i64> count_R_cases_nested(i64 U, i64 v, i64 w) {
    const i64 Q = U * U;
    std::vector<i64> r(5, 0);
    for (i64 p = 2; p <= Q; ++p)
        for (i64 q = 1; q <= Q; ++q) {
            if (std::gcd(p, q) != 1) continue;
            if (inverse_by_search(q, p) * w > v * p) continue;
            for (i64 n = 2; n * q < Q; ++n)
                for (i64 k = 1; k < n; ++k) {
                    i64 t = n * q + k * p;
                    if (t > Q) break;
                    if (p <= q && q <= U) ++r[0];
                    else if (p <= q) ++r[1];
                    else if (p <= U) ++r[2];
                    else if (n <= U) ++r[3];
                    else ++r[4];
                }
        }
    return r;
}

/// T_alpha(Q) by looping over (q1, q2, a1, a2) and testing the determinant directly.
inline i64 count_T_nested(i64 Q, i64 v, i64 w) {
    i64 c = 0;
    for (i64 q1 = 1; q1 <= Q; ++q1)
        for (i64 q2 = q1 + 1; q2 <= Q; ++q2)
            for (i64 a1 = 1; a1 <= q1; ++a1) {
                if (a1 * w > v * q1) break;
                for (i64 a2 = 1; a2 <= q2; ++a2) {
                    if (a1 * q2 - a2 * q1 != 1) continue;
                    for (i64 n = 2; n <= Q; ++n)
                        for (i64 m = 1; m < n; ++m) {
                            i64 a = n * a2 - m * a1, b = n * q2 - m * q1;
                            if (1 <= a && a < b && b <= Q) ++c;
                        }
                }
            }
    return c;
}

/// phi by trial division.
inline i64 phi_trial(i64 n) {
    i64 result = n;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

inline int mu_trial(i64 n) {
    int mu = 1;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline i64 divisor_count_trial(i64 n) {
    i64 c = 0;
    for (i64 d = 1; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

/// sum_{n >= 0} (n + x)^-2 by direct summation to M terms plus the integral tail 1/(M + x - 1/2).
inline double hurwitz_direct(double x, long M = 20000) {
    long double s = 0;
    for (long n = M - 1; n >= 0; --n) s += 1.0L / ((n + x) * (n + x));
    return static_cast<double>(s + 1.0L / (M + x - 0.5L));
}

}  // namespace oracle
