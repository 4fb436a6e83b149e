#include "dedekind_lab/asymptotics.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace dlab;
using namespace dlab::asym;
using farey::Side;
using farey::Statistic;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Hurwitz, HalfAndOne) {
    EXPECT_NEAR(hurwitz_zeta2(0.5), kPi * kPi / 2, 1e-12);
    EXPECT_NEAR(hurwitz_zeta2(1.0), kPi * kPi / 6, 1e-12);
    EXPECT_THROW(hurwitz_zeta2(0.0), std::domain_error);
}

TEST(Hurwitz, MatchesDirectSummation) {
    for (double x : {0.01, 0.1, 0.25, 1.0 / 3, 0.5, 0.77, 1.0}) EXPECT_NEAR(hurwitz_zeta2(x), oracle::hurwitz_direct(x), 1e-11) << x;
}

// sum_{r=1}^{w} zeta(2, r/w) = w^2 zeta(2)
TEST(Hurwitz, MultiplicationTheorem) {
    for (i64 w = 1; w <= 50; ++w) {
        real total = 0;
        for (i64 r = 1; r <= w; ++r) total += hurwitz_zeta2(r, w);
        ASSERT_NEAR(static_cast<double>(total), w * w * kPi * kPi / 6, 1e-10 * w * w) << w;
    }
}

TEST(Constants, KnownValuesAndStability) {
    const auto& c = fundamental_constants();
    EXPECT_NEAR(c.zeta2, 1.644934066848, 1e-12);
    EXPECT_NEAR(c.euler_gamma, 0.577215664902, 1e-12);
    EXPECT_NEAR(c.zeta_prime2, -0.937548254316, 1e-12);
    EXPECT_LT(c.euler_gamma_spread, 1e-12);
    EXPECT_LT(c.zeta_prime2_spread, 1e-12);
}

TEST(FAlpha, HalfIsPiSquaredOverEight) { EXPECT_NEAR(F_alpha({1, 2}), kPi * kPi / 8, 1e-12); }

TEST(FAlpha, AtOneVanishes) { EXPECT_EQ(F_alpha({1, 1}), 0.0); }

// alpha F(alpha) + (1 - alpha) F(1 - alpha) = zeta(2)(1 - 1/w^2)
TEST(FAlpha, ComplementIdentity) {
    for (i64 w = 2; w <= 30; ++w)
        for (i64 v = 1; v < w; ++v) {
            if (std::gcd(v, w) != 1) continue;
            ReducedFraction a(v, w);
            double lhs = a.to_double() * F_alpha(a) + a.complement().to_double() * F_alpha(a.complement());
            ASSERT_NEAR(lhs, kPi * kPi / 6 * (1.0 - 1.0 / (w * w)), 1e-9) << a.str();
        }
}

TEST(Predict, FullIntervalCoefficientsAtOne) {
    auto [C1, C2] = full_interval_coefficients();
    auto [c2, c1] = ell_coefficients({1, 1});
    EXPECT_NEAR(c2, C1, 1e-12);
    EXPECT_NEAR(c1, C2, 1e-12);
    EXPECT_NEAR(C1, 3.0 / (kPi * kPi), 1e-12);
}

TEST(Predict, DedekindSlopes) {
    const double l = std::log(1000.0);
    EXPECT_NEAR(predict(Statistic::dedekind_s, {1, 2}, 1000).main_terms, l / 16, 1e-12);
    EXPECT_NEAR(predict(Statistic::dedekind_s, {1, 3}, 1000).main_terms, 2 * l / 27, 1e-12);
    EXPECT_EQ(predict(Statistic::dedekind_s, {1, 1}, 1000).main_terms, 0.0);
    EXPECT_THROW(predict(Statistic::dedekind_s, {2, 3}, 1000), std::domain_error);
    EXPECT_THROW(predict(Statistic::dedekind_s, {1, 3}, 1000, Side::upper_complement), std::domain_error);
}

TEST(Predict, EllRequiresSmallDenominator) {
    EXPECT_THROW(predict(Statistic::ell, {1, 40}, 1000), std::domain_error);
    EXPECT_NO_THROW(predict(Statistic::ell, {1, 31}, 1000));
    EXPECT_THROW(predict(Statistic::L, {1, 2}, 1000), std::domain_error);
}

TEST(Predict, ComplementDiffersByDenominatorTerm) {
    for (ReducedFraction a : {ReducedFraction{1, 2}, ReducedFraction{1, 3}, ReducedFraction{3, 7}}) {
        const i64 Q = 5000;
        double lo = predict(Statistic::ell, a, Q).main_terms;
        double up = predict(Statistic::ell, a, Q, Side::upper_complement).main_terms;
        double w = static_cast<double>(a.den());
        EXPECT_NEAR(lo - up, (1 - 1 / (w * w)) * std::log(5000.0), 1e-9);
    }
}

TEST(Predict, ErrorScale) {
    EXPECT_NEAR(error_scale_E({1, 2}), 1 + std::pow(std::log(2.0), 2), 1e-12);
    EXPECT_EQ(predict(Statistic::ell, {1, 1}, 100).error_scale, 1.0);
}

TEST(Residuals, TableIsAnnotated) {
    const std::vector<i64> grid{50, 100};
    auto rows = residual_table(Statistic::ell, {1, 2}, grid);
    ASSERT_EQ(rows.size(), 2u);
    for (const auto& r : rows) {
        ASSERT_TRUE(r.predicted_main && r.residual && r.error_scale);
        EXPECT_NEAR(*r.residual, r.mean - *r.predicted_main, 1e-12);
    }
    auto plain = residual_table(Statistic::L, {1, 2}, grid);
    EXPECT_FALSE(plain[0].predicted_main);
    const std::vector<i64> bad{100, 50};
    EXPECT_THROW(residual_table(Statistic::ell, {1, 2}, bad), std::domain_error);
}

TEST(Residuals, FitSlopeRecoversLine) {
    const std::vector<double> xs{1, 2, 3, 4}, ys{3, 5, 7, 9};
    EXPECT_NEAR(fit_slope(xs, ys), 2.0, 1e-12);
}

TEST(Delta, SmallExamples) {
    auto d = delta_cuts({1, 1}, {1, 1}, 3);
    EXPECT_EQ(d.lower_total, 4);
    EXPECT_EQ(d.complement_total, 4);
    EXPECT_EQ(d.value, 0.0);
}

TEST(Irrational, ConvergentCutInducesSameSet) {
    std::vector<i64> ones(40, 1);
    ones[0] = 1;
    const double golden = (std::sqrt(5.0) - 1) / 2;
    for (i64 Q : {10, 50, 200}) {
        auto cut = exact_cut_for(ones, Q, true);
        EXPECT_GT(cut.den(), Q);
        i64 a = 0, b = 0;
        for (const auto& x : farey::farey_enumerate(farey::full_range(Q))) {
            if (x < cut) ++a;
            if (x.to_double() < golden) ++b;
        }
        EXPECT_EQ(a, b) << Q;
    }
    std::vector<i64> short_digits{1, 1, 1};
    EXPECT_THROW(exact_cut_for(short_digits, 100, true), std::domain_error);
}

TEST(Irrational, IndexIsEvenAndGrows) {
    EXPECT_EQ(convergent_index(1000) % 2, 0u);
    EXPECT_LE(convergent_index(1000), convergent_index(100000000));
}

TEST(Irrational, ExperimentRowIsConsistent) {
    std::vector<i64> ones(40, 1);
    const std::vector<i64> grid{300};
    auto rows = irrational_experiment(ones, grid);
    ASSERT_EQ(rows.size(), 1u);
    const auto& r = rows[0];
    EXPECT_LT(r.beta, r.beta_prime);
    EXPECT_LE(r.delta_lower, r.delta_upper);
    EXPECT_GT(r.cut_count, 0);
    EXPECT_NEAR(r.ratio, r.twelve_mean_s / std::log(300.0), 1e-12);
}

TEST(Tail, SmallCaseByHand) {
    // Q = 3, log 3 ~ 1.0986: a log 3 <= b admits 1/2, 1/3 and 2/3
    auto t = tail_experiment(3);
    EXPECT_EQ(t.set_size, 3);
    EXPECT_EQ(t.count, 5);
    EXPECT_EQ(t.sum_sab, 0);
    EXPECT_EQ(t.sum_sba, 0);
}

TEST(Tail, SumsMatchDirectEvaluation) {
    const i64 Q = 60;
    auto t = tail_experiment(Q);
    const double g = std::log(static_cast<double>(Q));
    mpq_class sab = 0, sba = 0;
    i64 n = 0;
    for (i64 b = 1; b <= Q; ++b)
        for (i64 a = 1; a * g <= b; ++a)
            if (std::gcd(a, b) == 1) {
                ++n;
                sab += oracle::dedekind_definition(a, b);
                sba += oracle::dedekind_definition(b, a);
            }
    EXPECT_EQ(t.set_size, n);
    EXPECT_EQ(t.sum_sab, sab);
    EXPECT_EQ(t.sum_sba, sba);
}

TEST(Harmonic, ResidualsAreSmallRelativeToScale) {
    auto rows = harmonic_residuals(2000);
    ASSERT_EQ(rows.size(), 10u);
    for (const auto& r : rows) {
        EXPECT_FALSE(r.provenance.empty());
        EXPECT_LT(std::fabs(r.scaled), 10.0) << r.name;
    }
}

TEST(Mass, RatioIsBounded) {
    for (i64 a : {101, 1009, 5000}) {
        double m = dedekind_mass_ratio(a);
        EXPECT_GT(m, 0.0);
        EXPECT_LT(m, 1.0);
    }
}
