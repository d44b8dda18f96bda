#include "bohr/errors.hpp"
#include "bohr/series.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

using namespace bohr;

namespace {

std::vector<double> coeffs_of(const TruncatedSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

}  // namespace

TEST(Series, ConstructionRejectsNonFinite) {
    EXPECT_THROW(TruncatedSeries({1.0, std::numeric_limits<double>::infinity()}), SeriesOverflow);
    EXPECT_THROW(TruncatedSeries({1.0, std::nan("")}), SeriesOverflow);
    EXPECT_THROW(TruncatedSeries({1.0, 1e301}), SeriesOverflow);
    EXPECT_THROW(TruncatedSeries(std::vector<double>{}), DomainError);
    EXPECT_THROW(TruncatedSeries({1.0}, -1.0, 0.5), DomainError);
    EXPECT_THROW(TruncatedSeries({1.0}, 0.0, 1.5), DomainError);
}

TEST(Series, MultiplySquaresBinomial) {
    const auto p = multiply(TruncatedSeries({1.0, 1.0}), TruncatedSeries({1.0, 1.0}));
    // truncated to the common order 1
    EXPECT_EQ(coeffs_of(p), (std::vector<double>{1.0, 2.0}));
    const auto q = multiply(TruncatedSeries({1.0, 1.0, 0.0}), TruncatedSeries({1.0, 1.0, 0.0}));
    EXPECT_EQ(coeffs_of(q), (std::vector<double>{1.0, 2.0, 1.0}));
}

TEST(Series, MultiplyGeometricGivesTriangular) {
    const auto g = TruncatedSeries::geometric(4);
    EXPECT_EQ(coeffs_of(multiply(g, g)), (std::vector<double>{1, 2, 3, 4, 5}));
}

TEST(Series, MajorantProductForJanowskiZero) {
    // M_{K'} = Σ (n+1) z^n and M_φ = 1 + 2Σ z^n; product is (1+z)/(1−z)³ = Σ (n+1)² z^n
    const TruncatedSeries kp({1, 2, 3, 4});
    const TruncatedSeries phi({1, 2, 2, 2});
    EXPECT_EQ(coeffs_of(multiply(kp, phi)), (std::vector<double>{1, 4, 9, 16}));
}

TEST(Series, MultiplyOverflowIsExplicit) {
    const TruncatedSeries big({1e200, 1e200});
    EXPECT_THROW(multiply(big, big), SeriesOverflow);
}

TEST(Series, MultiplyDropsTailHint) {
    const auto g = TruncatedSeries::geometric(64).with_tail_estimate();
    ASSERT_TRUE(g.tail_hint().has_value());
    const auto p = multiply(g, g);
    EXPECT_TRUE(p.tail_dropped());
    EXPECT_FALSE(p.tail_hint().has_value());
}

TEST(Series, IntegrateFromZero) {
    EXPECT_EQ(coeffs_of(integrate_from_zero(TruncatedSeries({1.0}))), (std::vector<double>{0.0, 1.0}));
    const auto k = integrate_from_zero(TruncatedSeries({1, 2, 3, 4, 5}));
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_DOUBLE_EQ(k[n], 1.0);
    EXPECT_DOUBLE_EQ(k[0], 0.0);
}

TEST(Series, IntegrateWeighted) {
    const auto one = integrate_weighted_t(TruncatedSeries({1.0}));
    EXPECT_EQ(coeffs_of(one), (std::vector<double>{0.0, 0.0, 0.5}));
    const auto w = integrate_weighted_t(TruncatedSeries({1, 2, 3, 4}));
    for (std::size_t n = 0; n < 4; ++n) EXPECT_DOUBLE_EQ(w[n + 2], (n + 1.0) / (n + 2.0));
    const auto poly = integrate_weighted_t(TruncatedSeries({1.0, 4.0 / 3.0}));
    EXPECT_DOUBLE_EQ(poly[2], 0.5);
    EXPECT_DOUBLE_EQ(poly[3], 4.0 / 9.0);
    const auto cube = integrate_weighted_power(TruncatedSeries({1.0}), 3);
    EXPECT_DOUBLE_EQ(cube[4], 0.25);
}

TEST(Series, DerivativeAndShift) {
    const TruncatedSeries a({5, 1, 2, 3});
    EXPECT_EQ(coeffs_of(derivative(a)), (std::vector<double>{1, 4, 9}));
    EXPECT_EQ(coeffs_of(derivative(TruncatedSeries({7.0}))), (std::vector<double>{0.0}));
    EXPECT_EQ(coeffs_of(shift_up(a, 2)), (std::vector<double>{0, 0, 5, 1, 2, 3}));
}

TEST(Series, Majorant) {
    EXPECT_EQ(coeffs_of(majorant(TruncatedSeries({1, -2, 3}))), (std::vector<double>{1, 2, 3}));
    EXPECT_EQ(coeffs_of(majorant(TruncatedSeries({1, -0.5, 0.25}))), (std::vector<double>{1, 0.5, 0.25}));
    const TruncatedSeries positive({1, 4.0 / 3.0, 11.0 / 9.0});
    EXPECT_EQ(majorant(positive), positive);
}

TEST(Series, AddAndScale) {
    const auto s = add(TruncatedSeries({1, 2}), TruncatedSeries({1, 1, 1}));
    EXPECT_EQ(coeffs_of(s), (std::vector<double>{2, 3, 1}));
    EXPECT_EQ(coeffs_of(scale(TruncatedSeries({1, -2}), -0.5)), (std::vector<double>{-0.5, 1.0}));
}

TEST(Series, EvalGeometricTail) {
    const auto g = TruncatedSeries::geometric(200);
    const auto k = shift_up(g, 1);  // z/(1−z)
    EXPECT_NEAR(eval(k, 1.0 / 3.0), 0.5, 1e-12);
    EXPECT_NEAR(eval(g, -0.5), 1.0 / 1.5, 1e-12);
    EXPECT_THROW(eval(g, 1.0), DomainError);
    EXPECT_THROW(eval(g, -1.2), DomainError);
}

TEST(Series, TailEstimateAndValidityRadius) {
    const auto g = TruncatedSeries::geometric(256).with_tail_estimate();
    ASSERT_TRUE(g.tail_hint().has_value());
    EXPECT_LE(tail_estimate(g, g.r_max()), 1e-12 * 1.0001);
    EXPECT_LT(g.r_max(), 0.999);
    EXPECT_GT(g.r_max(), 0.85);
    EXPECT_THROW(eval(g, std::min(0.999, g.r_max() + 1e-3)), DomainError);

    const SeriesValue v = eval_with_bound(g, 0.5);
    EXPECT_NEAR(v.value, 2.0, 1e-12);
    EXPECT_GE(v.error_bound, 0.0);
    EXPECT_LE(v.error_bound, 1e-12);

    const auto poly = TruncatedSeries({1.0, 2.0, 0.0, 0.0}).with_tail_estimate();
    EXPECT_DOUBLE_EQ(poly.r_max(), 1.0);
    EXPECT_DOUBLE_EQ(*poly.tail_hint(), 0.0);
}

TEST(Series, ResizedPadsAndTruncates) {
    const TruncatedSeries a({1, 2, 3});
    EXPECT_EQ(coeffs_of(a.resized(4)), (std::vector<double>{1, 2, 3, 0, 0}));
    EXPECT_EQ(coeffs_of(a.resized(1)), (std::vector<double>{1, 2}));
}

TEST(Recurrence, IdentityPhi) {
    const auto kp = solve_kprime_recurrence(TruncatedSeries({1.0}), 16);
    EXPECT_DOUBLE_EQ(kp[0], 1.0);
    for (std::size_t n = 1; n <= 16; ++n) EXPECT_DOUBLE_EQ(kp[n], 0.0);
}

TEST(Recurrence, JanowskiZeroGivesNPlusOne) {
    std::vector<double> b(65, 2.0);
    b[0] = 1.0;
    const auto kp = solve_kprime_recurrence(TruncatedSeries(b), 64);
    for (std::size_t n = 0; n <= 64; ++n) EXPECT_NEAR(kp[n], n + 1.0, 1e-12 * (n + 1.0));
}

TEST(Recurrence, JanowskiMatchesBinomialSeries) {
    // (1 − z)^(−γ) has coefficients c_n = c_{n−1} (n − 1 + γ)/n
    for (double beta : {0.1, 0.5, 0.9}) {
        const double gamma = 2.0 - 2.0 * beta;
        std::vector<double> b(129, 2.0 * (1.0 - beta));
        b[0] = 1.0;
        const auto kp = solve_kprime_recurrence(TruncatedSeries(b), 128);
        double c = 1.0;
        for (std::size_t n = 1; n <= 128; ++n) {
            c *= (n - 1.0 + gamma) / n;
            EXPECT_NEAR(kp[n], c, 1e-12 * std::max(1.0, c)) << "beta " << beta << " n " << n;
        }
    }
}

TEST(Recurrence, Poly43MatchesExponentialExpansion) {
    const auto kp = solve_kprime_recurrence(TruncatedSeries({1.0, 4.0 / 3.0, 2.0 / 3.0}), 40);
    EXPECT_NEAR(kp[1], 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(kp[2], 11.0 / 9.0, 1e-15);
    // exp(4z/3 + z²/3) summed directly at a few points
    for (double t : {-0.9, -0.4, 0.2, 0.7}) {
        EXPECT_NEAR(eval(kp, t), std::exp(4.0 * t / 3.0 + t * t / 3.0), 1e-13);
    }
}

TEST(Recurrence, RejectsBadNormalization) {
    EXPECT_THROW(solve_kprime_recurrence(TruncatedSeries({2.0, 1.0}), 8), DomainError);
}

TEST(Recurrence, OverflowSurfaces) {
    std::vector<double> b(5, 1e6);
    b[0] = 1.0;
    EXPECT_THROW(solve_kprime_recurrence(TruncatedSeries(b), 4000), SeriesOverflow);
}
