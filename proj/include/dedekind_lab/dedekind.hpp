#pragma once

// Dedekind sums s(a, b) by three independent routes.

#include "dedekind_lab/contfrac.hpp"
#include "dedekind_lab/core_arith.hpp"

#include <stdexcept>

namespace dlab::dedekind {

/// ((k/b)) scaled by 2b: 2(k mod b) - b, or 0 when b | k.
constexpr i64 sawtooth_scaled(i64 k, i64 b) noexcept {
    i64 r = mod_floor(k, b);
    return r == 0 ? 0 : 2 * r - b;
}

/// Direct b-term sawtooth sum. Valid for any integer a, coprime or not.
inline ExactRational dedekind_naive(i64 a, i64 b) {
    if (b < 1) throw std::domain_error("dedekind_naive: b must be positive");
    i128 total = 0;
    for (i64 n = 1; n <= b; ++n)
        total += static_cast<i128>(sawtooth_scaled(n, b)) * sawtooth_scaled(n * (a % b), b);
    ExactRational r(make_integer(total), make_integer(static_cast<i128>(4) * b * b));
    r.canonicalize();
    return r;
}

/// The reciprocity right-hand side (b/a + a/b + 1/(ab))/12 - 1/4.
inline ExactRational reciprocity_rhs(i64 a, i64 b) {
    return (make_rational(b, a) + make_rational(a, b) + make_rational(1, a * b)) / 12 - ExactRational(1, 4);
}

/// Reciprocity recursion s(a,b) + s(b,a) = (b/a + a/b + 1/(ab))/12 - 1/4,
/// followed by (a, b) -> (b mod a, a). Requires gcd(a, b) = 1.
inline ExactRational dedekind_fast(i64 a, i64 b) {
    if (b < 1) throw std::domain_error("dedekind_fast: b must be positive");
    a = mod_floor(a, b);
    if (std::gcd(a, b) != 1)
        throw std::domain_error("dedekind_fast: gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
    ExactRational total = 0;
    int sign = 1;
    while (a != 0) {
        // s(a, b) = R(a, b) - s(b mod a, a)
        ExactRational term = reciprocity_rhs(a, b);
        if (sign > 0)
            total += term;
        else
            total -= term;
        sign = -sign;
        i64 r = b % a;
        b = a;
        a = r;
    }
    return total;
}

/// s(a, b) for arbitrary integers a and b >= 1: reduces by gcd and mod b first.
inline ExactRational dedekind_sum(i64 a, i64 b) {
    if (b < 1) throw std::domain_error("dedekind_sum: b must be positive");
    a = mod_floor(a, b);
    if (a == 0) return 0;
    i64 g = std::gcd(a, b);
    return dedekind_fast(a / g, b / g);
}

/// s(x) for x in [0, 1).
inline ExactRational dedekind_sum(ReducedFraction x) { return dedekind_sum(x.num(), x.den()); }

}  // namespace dlab::dedekind
