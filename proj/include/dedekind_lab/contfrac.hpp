#pragma once

// Regular and minus (by-excess) continued fractions of rationals in [0, 1].

#include "dedekind_lab/core_arith.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace dlab::cf {

/// [0; a1, ..., an] with an != 1; empty for 0. length() is L(x).
struct RegularCF {
    std::vector<i64> digits;
    i64 length() const noexcept { return static_cast<i64>(digits.size()); }
};

/// <1; b1, ..., bm> with every bi >= 2; empty for 1. length() is l(x).
struct MinusCF {
    std::vector<i64> digits;
    i64 length() const noexcept { return static_cast<i64>(digits.size()); }
};

struct CFStats {
    i64 sigma_odd = 0;
    i64 sigma_even = 0;
    i64 sigma_pm = 0;
    i64 L = 0;
    int eps = 0;
};

/// Everything the hot loops need from one Euclid pass, without allocating.
/// prev_den is the denominator q_{n-1} of the penultimate convergent, so the
/// reversed expansion [0; an, ..., a1] equals prev_den / den.
struct CFProfile {
    i64 L = 0;
    i64 sigma_odd = 0;
    i64 sigma_even = 0;
    i64 prev_den = 0;
};

inline CFProfile cf_profile(i64 num, i64 den) noexcept {
    CFProfile p;
    i64 q_prev = 0, q_cur = 1;  // q_{-1}, q_0
    i64 a = num, b = den;
    while (a != 0) {
        i64 digit = b / a;
        i64 r = b - digit * a;
        ++p.L;
        if (p.L & 1)
            p.sigma_odd += digit;
        else
            p.sigma_even += digit;
        i64 q_next = digit * q_cur + q_prev;
        q_prev = q_cur;
        q_cur = q_next;
        b = a;
        a = r;
    }
    p.prev_den = q_prev;
    return p;
}

inline RegularCF regular_cf(ReducedFraction x) {
    if (x.num() < 0 || x.num() >= x.den())
        throw std::domain_error("regular_cf: " + x.str() + " is outside [0, 1)");
    RegularCF out;
    i64 a = x.num(), b = x.den();
    while (a != 0) {
        out.digits.push_back(b / a);
        i64 r = b % a;
        b = a;
        a = r;
    }
    return out;
}

/// Exact value of [0; d1, ..., dn], or of [0; dn, ..., d1] when reversed.
inline ExactRational eval_regular_cf(std::span<const i64> digits, bool reversed = false) {
    for (i64 d : digits)
        if (d < 1) throw std::domain_error("eval_regular_cf: partial quotients must be positive");
    // backward recurrence on the tail value t = [d_k; d_{k+1}, ...]
    ExactRational tail = 0;
    const std::size_t n = digits.size();
    for (std::size_t i = 0; i < n; ++i) {
        i64 d = reversed ? digits[i] : digits[n - 1 - i];
        tail = 1 / (make_rational(d, 1) + tail);
    }
    return tail;
}

/// By-excess Euclidean algorithm: y1 = b/(b-a), b_i = ceil(y_i), y_{i+1} = 1/(b_i - y_i).
inline MinusCF minus_cf(ReducedFraction x) {
    if (x.num() <= 0 || x.num() > x.den())
        throw std::domain_error("minus_cf: " + x.str() + " is outside (0, 1]");
    MinusCF out;
    if (x.num() == x.den()) return out;
    i64 P = x.den(), R = x.den() - x.num();  // y = P / R, gcd(P, R) = 1
    for (;;) {
        i64 digit = (P + R - 1) / R;
        out.digits.push_back(digit);
        if (R == 1) break;
        i64 next_R = digit * R - P;
        P = R;
        R = next_R;
    }
    return out;
}

/// 1 - 1/(b1 - 1/(b2 - ... - 1/bm)); the empty expansion is 1.
inline ExactRational eval_minus_cf(std::span<const i64> digits) {
    if (digits.empty()) return 1;
    ExactRational t = make_rational(digits.back(), 1);
    for (std::size_t i = digits.size() - 1; i-- > 0;) {
        if (digits[i] < 2) throw std::domain_error("eval_minus_cf: digits must be >= 2");
        t = make_rational(digits[i], 1) - 1 / t;
    }
    return 1 - 1 / t;
}

/// Number of by-excess steps for num/den in (0, 1], computed without emitting digits.
/// Runs of the digit 2 are collapsed into one division, so the cost follows the
/// regular expansion length rather than l(x). Zero input returns 0 (aggregate convention).
inline i64 ell_length_raw(i64 num, i64 den) noexcept {
    if (num == 0 || num == den) return 0;
    i64 P = den, R = den - num;
    i64 count = 0;
    for (;;) {
        if (R == 1) return count + 1;
        if (P < 2 * R) {
            // y = 1 + D/R in (1, 2): the digit 2 repeats while R > D
            i64 D = P - R;
            i64 run = (R - 1) / D;
            count += run;
            R -= run * D;
            P = R + D;
            continue;
        }
        i64 digit = (P + R - 1) / R;
        ++count;
        i64 next_R = digit * R - P;
        P = R;
        R = next_R;
    }
}

inline i64 ell_length(ReducedFraction x) {
    if (x.num() <= 0 || x.num() > x.den())
        throw std::domain_error("ell_length: " + x.str() + " is outside (0, 1]");
    return ell_length_raw(x.num(), x.den());
}

/// Partial-quotient sums of x in (0, 1) together with the correction
/// eps = sigma_odd - l(x). Throws std::logic_error if eps falls outside {0, 1}
/// or l(1 - x) != sigma_even + eps.
inline CFStats cf_statistics(ReducedFraction x) {
    if (x.num() <= 0 || x.num() >= x.den())
        throw std::domain_error("cf_statistics: " + x.str() + " is outside (0, 1)");
    CFProfile p = cf_profile(x.num(), x.den());
    CFStats s;
    s.sigma_odd = p.sigma_odd;
    s.sigma_even = p.sigma_even;
    s.sigma_pm = p.sigma_odd - p.sigma_even;
    s.L = p.L;
    i64 eps = p.sigma_odd - ell_length_raw(x.num(), x.den());
    if (eps != 0 && eps != 1)
        throw std::logic_error("cf_statistics: correction term " + std::to_string(eps) + " at " + x.str());
    if (ell_length_raw(x.den() - x.num(), x.den()) != p.sigma_even + eps)
        throw std::logic_error("cf_statistics: complement length mismatch at " + x.str());
    s.eps = static_cast<int>(eps);
    return s;
}

/// 24 w s(v/w) as an integer, from the regular expansion of v/w in [0, 1):
///   s(x) = ((-1)^n - 1)/8 + (x - (-1)^n [0; an, ..., a1] + sigma_pm(x)) / 12.
inline i64 hickerson_scaled(i64 num, i64 den) noexcept {
    if (num == 0) return 0;
    CFProfile p = cf_profile(num, den);
    const i64 sign = (p.L & 1) ? -1 : 1;
    return 3 * den * (sign - 1) + 2 * (num - sign * p.prev_den + den * (p.sigma_odd - p.sigma_even));
}

inline ExactRational hickerson_sum(ReducedFraction x) {
    if (x.num() < 0 || x.num() >= x.den())
        throw std::domain_error("hickerson_sum: " + x.str() + " is outside [0, 1)");
    return make_rational(hickerson_scaled(x.num(), x.den()), 24 * x.den());
}

/// Convergents p_k/q_k of [0; d1, d2, ...], k = 1..digits.size().
inline std::vector<ReducedFraction> convergents(std::span<const i64> digits) {
    std::vector<ReducedFraction> out;
    i64 p_prev = 1, p_cur = 0;  // p_{-1}, p_0
    i64 q_prev = 0, q_cur = 1;
    for (i64 d : digits) {
        if (d < 1) throw std::domain_error("convergents: partial quotients must be positive");
        i64 p_next = d * p_cur + p_prev;
        i64 q_next = d * q_cur + q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
        out.emplace_back(p_cur, q_cur);
    }
    return out;
}

}  // namespace dlab::cf
