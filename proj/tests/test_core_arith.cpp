#include "dedekind_lab/core_arith.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dlab;

TEST(Gcd, Examples) {
    EXPECT_EQ(dlab::gcd(0, 7), 7);
    EXPECT_EQ(dlab::gcd(12, 18), 6);
    EXPECT_EQ(dlab::gcd(35, 64), 1);
}

TEST(Gcd, BothZeroIsDomainError) { EXPECT_THROW(dlab::gcd(0, 0), std::domain_error); }

TEST(ModInverse, Examples) {
    EXPECT_EQ(mod_inverse(3, 7), 5);
    EXPECT_EQ(mod_inverse(1, 9), 1);
    EXPECT_EQ(mod_inverse(7, 3), 1);
}

TEST(ModInverse, ModulusOneReturnsOne) {
    EXPECT_EQ(mod_inverse(0, 1), 1);
    EXPECT_EQ(mod_inverse(5, 1), 1);
}

TEST(ModInverse, NonCoprimeIsDomainError) {
    EXPECT_THROW(mod_inverse(4, 6), std::domain_error);
    EXPECT_THROW(mod_inverse(0, 5), std::domain_error);
}

TEST(ModInverse, MatchesExhaustiveSearchAndNegativeInputs) {
    for (i64 q = 1; q <= 120; ++q)
        for (i64 a = -q; a <= 2 * q; ++a) {
            if (std::gcd(a < 0 ? -a : a, q) != 1) continue;
            i64 inv = mod_inverse(a, q);
            ASSERT_GE(inv, 1);
            ASSERT_LE(inv, q);
            ASSERT_EQ(inv, oracle::inverse_by_search(a, q)) << a << " mod " << q;
        }
}

// q inv_p(q) + p inv_q(p) = 1 + p q for coprime p, q >= 2
TEST(ModInverse, ReciprocalInverseIdentityExhaustive) {
    for (i64 p = 2; p <= 500; ++p)
        for (i64 q = 2; q <= 500; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ASSERT_EQ(q * mod_inverse(q, p) + p * mod_inverse(p, q), 1 + p * q) << p << "," << q;
        }
}

TEST(Sieve, Examples) {
    SieveTables s = sieve_tables(100);
    EXPECT_EQ(s.phi(1), 1);
    EXPECT_EQ(s.mu(1), 1);
    EXPECT_EQ(s.mu(6), 1);
    EXPECT_EQ(s.dcount(12), 6);
}

TEST(Sieve, ZeroLimitIsDomainError) { EXPECT_THROW(sieve_tables(0), std::domain_error); }

TEST(Sieve, MatchesTrialDivision) {
    SieveTables s(3000);
    for (i64 q = 1; q <= 3000; ++q) {
        ASSERT_EQ(s.phi(q), oracle::phi_trial(q)) << q;
        ASSERT_EQ(s.mu(q), oracle::mu_trial(q)) << q;
        ASSERT_EQ(s.dcount(q), oracle::divisor_count_trial(q)) << q;
    }
}

TEST(Sieve, MoebiusSumsToIndicator) {
    SieveTables s(600);
    for (i64 q = 1; q <= 600; ++q) {
        int total = 0;
        for (i64 d = 1; d <= q; ++d)
            if (q % d == 0) total += s.mu(d);
        ASSERT_EQ(total, q == 1 ? 1 : 0) << q;
    }
}

TEST(Sieve, PhiIsMultiplicative) {
    SieveTables s(2000);
    for (i64 a = 1; a <= 44; ++a)
        for (i64 b = 1; a * b <= 2000; ++b)
            if (std::gcd(a, b) == 1) {
                ASSERT_EQ(s.phi(a * b), s.phi(a) * s.phi(b));
            }
}

TEST(Sieve, FareyCountMatchesPairCounting) {
    SieveTables s(300);
    for (i64 x = 1; x <= 300; x += 7) {
        i64 pairs = 0;
        for (i64 q = 1; q <= x; ++q)
            for (i64 a = 1; a <= q; ++a)
                if (std::gcd(a, q) == 1) ++pairs;
        ASSERT_EQ(s.farey_count(x) - 1, pairs) << x;
    }
}

TEST(ReducedFraction, ReducesAndOrders) {
    ReducedFraction f(6, 14);
    EXPECT_EQ(f.num(), 3);
    EXPECT_EQ(f.den(), 7);
    EXPECT_EQ(ReducedFraction(0, 5), ReducedFraction(0, 1));
    EXPECT_LT(ReducedFraction(1, 3), ReducedFraction(1, 2));
    EXPECT_EQ(ReducedFraction(2, 3).complement(), ReducedFraction(1, 3));
    EXPECT_THROW(ReducedFraction(1, 0), std::domain_error);
    EXPECT_THROW(ReducedFraction::exact(2, 4), std::domain_error);
}

TEST(ReducedFraction, ParseReportsReduction) {
    bool reduced = false;
    auto f = ReducedFraction::parse("2/4", &reduced);
    EXPECT_TRUE(reduced);
    EXPECT_EQ(f, ReducedFraction(1, 2));
    f = ReducedFraction::parse("3/7", &reduced);
    EXPECT_FALSE(reduced);
    EXPECT_THROW(ReducedFraction::parse("1/x"), std::invalid_argument);
    EXPECT_THROW(ReducedFraction::parse("1/0"), std::domain_error);
}

TEST(ExactRational, AddSubtractRoundTripProperty) {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<i64> num(-1000000, 1000000), den(1, 1000000);
    for (int i = 0; i < 2000; ++i) {
        ExactRational x = make_rational(num(rng), den(rng));
        ExactRational y = make_rational(num(rng), den(rng));
        ASSERT_EQ((x + y) - y, x);
        ASSERT_EQ(x.get_den() > 0, true);
        ASSERT_EQ(gcd(x.get_num(), x.get_den()), 1);
    }
}

TEST(ExactRational, FormatAlwaysHasDenominator) {
    EXPECT_EQ(format_rational(make_rational(-2, 28)), "-1/14");
    EXPECT_EQ(format_rational(make_rational(0, 5)), "0/1");
    EXPECT_EQ(format_rational(make_rational(6, 3)), "2/1");
}

TEST(ExactCounter, EscalatesInsteadOfWrapping) {
    ExactCounter c;
    const i64 big = INT64_MAX - 5;
    c += big;
    c += big;
    c += 11;
    EXPECT_FALSE(c.fits_i64());
    ExactInteger expected = make_integer(big) * 2 + 11;
    EXPECT_EQ(c.value(), expected);
}

TEST(ExactInteger, FromInt128) {
    i128 v = static_cast<i128>(INT64_MAX) * 1000 + 7;
    EXPECT_EQ(make_integer(v), make_integer(INT64_MAX) * 1000 + 7);
    EXPECT_EQ(make_integer(-v), -(make_integer(INT64_MAX) * 1000 + 7));
}
