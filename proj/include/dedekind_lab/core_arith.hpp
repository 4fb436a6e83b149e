#pragma once

// Exact integer and rational kernel shared by every other module.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlab {

using i64 = std::int64_t;
using i128 = __int128;

/// Raised when a request exceeds a computation's documented size guard.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using ExactRational = mpq_class;
using ExactInteger = mpz_class;

inline ExactRational make_rational(i64 num, i64 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    ExactRational r{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
    r.canonicalize();
    return r;
}

inline ExactInteger make_integer(i64 v) { return ExactInteger(static_cast<long>(v)); }

inline ExactInteger make_integer(i128 v) {
    if (v >= INT64_MIN && v <= INT64_MAX) return make_integer(static_cast<i64>(v));
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string digits;
    do {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    } while (u != 0);
    if (neg) digits.push_back('-');
    return ExactInteger(std::string(digits.rbegin(), digits.rend()));
}

/// Renders as "num/den", including integers ("3/1") so the output schema is uniform.
inline std::string format_rational(const ExactRational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline ExactRational parse_rational(const std::string& text) {
    ExactRational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    r.canonicalize();
    return r;
}

/// Greatest common divisor; gcd(0, 0) is rejected.
inline i64 gcd(i64 a, i64 b) {
    if (a < 0 || b < 0) throw std::domain_error("gcd: negative argument");
    if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
    return std::gcd(a, b);
}

/// Floor division and non-negative remainder for signed operands.
constexpr i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

/// Least positive inverse of a modulo q, i.e. the representative in {1, ..., q}.
/// For q = 1 every residue is its own inverse and 1 is returned.
inline i64 mod_inverse(i64 a, i64 q) {
    if (q < 1) throw std::domain_error("mod_inverse: modulus must be positive");
    if (q == 1) return 1;
    i64 r0 = q, r1 = mod_floor(a, q);
    i64 s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 t = r0 / r1;
        i64 r2 = r0 - t * r1;
        i64 s2 = s0 - t * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1)
        throw std::domain_error("mod_inverse: " + std::to_string(a) + " is not invertible mod " + std::to_string(q));
    i64 inv = mod_floor(s0, q);
    return inv == 0 ? q : inv;
}

/// A rational v/w in lowest terms with w >= 1.
class ReducedFraction {
public:
    constexpr ReducedFraction() = default;

    /// Reduces num/den; throws when den <= 0.
    ReducedFraction(i64 num, i64 den) {
        if (den <= 0) throw std::domain_error("fraction denominator must be positive");
        if (num == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        num_ = num / g;
        den_ = den / g;
    }

    /// Accepts only inputs already in lowest terms.
    static ReducedFraction exact(i64 num, i64 den) {
        ReducedFraction f(num, den);
        if (f.num_ != num || f.den_ != den)
            throw std::domain_error(std::to_string(num) + "/" + std::to_string(den) + " is not reduced");
        return f;
    }

    /// Parses "v/w" or an integer; reports whether reduction was needed.
    static ReducedFraction parse(const std::string& text, bool* was_reduced = nullptr) {
        auto slash = text.find('/');
        i64 num = 0, den = 1;
        try {
            std::size_t used = 0;
            if (slash == std::string::npos) {
                num = std::stoll(text, &used);
                if (used != text.size()) throw std::invalid_argument(text);
            } else {
                std::string a = text.substr(0, slash), b = text.substr(slash + 1);
                num = std::stoll(a, &used);
                if (used != a.size()) throw std::invalid_argument(text);
                den = std::stoll(b, &used);
                if (used != b.size()) throw std::invalid_argument(text);
            }
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed fraction '" + text + "'");
        }
        ReducedFraction f(num, den);
        if (was_reduced) *was_reduced = (f.num_ != num || f.den_ != den);
        return f;
    }

    constexpr i64 num() const noexcept { return num_; }
    constexpr i64 den() const noexcept { return den_; }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    ExactRational to_exact() const { return make_rational(num_, den_); }
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    /// 1 - x
    ReducedFraction complement() const { return ReducedFraction(den_ - num_, den_); }

    friend constexpr bool operator==(const ReducedFraction&, const ReducedFraction&) = default;
    friend constexpr std::strong_ordering operator<=>(const ReducedFraction& a, const ReducedFraction& b) {
        return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
    }

private:
    i64 num_ = 0;
    i64 den_ = 1;
};

/// x <= (v/w) * y, decided by cross-multiplication.
constexpr bool le_scaled(i64 x, ReducedFraction alpha, i64 y) noexcept {
    return static_cast<i128>(x) * alpha.den() <= static_cast<i128>(alpha.num()) * y;
}

/// x < (v/w) * y
constexpr bool lt_scaled(i64 x, ReducedFraction alpha, i64 y) noexcept {
    return static_cast<i128>(x) * alpha.den() < static_cast<i128>(alpha.num()) * y;
}

/// Integer accumulator that spills into an arbitrary-precision integer instead of wrapping.
class ExactCounter {
public:
    ExactCounter& operator+=(i64 v) {
        i64 sum;
        if (__builtin_add_overflow(fast_, v, &sum)) {
            spill_ += make_integer(fast_);
            fast_ = v;
            spilled_ = true;
        } else {
            fast_ = sum;
        }
        return *this;
    }

    ExactCounter& operator+=(const ExactCounter& other) {
        *this += other.fast_;
        if (other.spilled_) {
            spill_ += other.spill_;
            spilled_ = true;
        }
        return *this;
    }

    ExactInteger value() const { return spilled_ ? spill_ + make_integer(fast_) : make_integer(fast_); }

    bool fits_i64() const noexcept { return !spilled_; }

private:
    i64 fast_ = 0;
    ExactInteger spill_ = 0;
    bool spilled_ = false;
};

/// Euler phi, Moebius mu and divisor count d(q) for q <= limit, from a single linear sieve.
/// Immutable after construction; safe to share across threads.
class SieveTables {
public:
    explicit SieveTables(i64 limit) : limit_(limit) {
        if (limit < 1) throw std::domain_error("sieve limit must be positive");
        const auto n = static_cast<std::size_t>(limit) + 1;
        phi_.assign(n, 0);
        mu_.assign(n, 0);
        dcount_.assign(n, 0);
        // exponent of the least prime factor, and d(q / p^e) for that factor
        std::vector<std::int32_t> lp_exp(n, 0), d_rest(n, 0);
        std::vector<std::int32_t> primes;
        phi_[1] = 1;
        mu_[1] = 1;
        dcount_[1] = 1;
        std::vector<bool> composite(n, false);
        for (i64 i = 2; i <= limit; ++i) {
            if (!composite[i]) {
                primes.push_back(static_cast<std::int32_t>(i));
                phi_[i] = static_cast<std::int32_t>(i - 1);
                mu_[i] = -1;
                dcount_[i] = 2;
                lp_exp[i] = 1;
                d_rest[i] = 1;
            }
            for (std::int32_t p : primes) {
                i64 m = i * p;
                if (m > limit) break;
                composite[m] = true;
                if (i % p == 0) {
                    phi_[m] = phi_[i] * p;
                    mu_[m] = 0;
                    lp_exp[m] = lp_exp[i] + 1;
                    d_rest[m] = d_rest[i];
                    dcount_[m] = d_rest[m] * (lp_exp[m] + 1);
                    break;
                }
                phi_[m] = phi_[i] * (p - 1);
                mu_[m] = -mu_[i];
                lp_exp[m] = 1;
                d_rest[m] = dcount_[i];
                dcount_[m] = dcount_[i] * 2;
            }
        }
    }

    i64 limit() const noexcept { return limit_; }
    i64 phi(i64 q) const { return phi_.at(static_cast<std::size_t>(q)); }
    int mu(i64 q) const { return mu_.at(static_cast<std::size_t>(q)); }
    i64 dcount(i64 q) const { return dcount_.at(static_cast<std::size_t>(q)); }

    /// 1 + sum_{q <= x} phi(q), the size of the Farey set of order x.
    i64 farey_count(i64 x) const {
        i64 total = 1;
        for (i64 q = 1; q <= x; ++q) total += phi(q);
        return total;
    }

private:
    i64 limit_;
    std::vector<std::int32_t> phi_;
    std::vector<std::int8_t> mu_;
    std::vector<std::int32_t> dcount_;
};

inline SieveTables sieve_tables(i64 limit) { return SieveTables(limit); }

}  // namespace dlab
