#include <gtest/gtest.h>

#include <cmath>

#include "ymwk/central.hpp"
#include "ymwk/channels.hpp"
#include "ymwk/spectral/oracles.hpp"

using namespace ymwk;

namespace {

const double kZeta3 = 1.2020569031595942854;

double ln_abs(const Rational& r) { return std::log(std::fabs(to_double(r))); }

}  // namespace

TEST(Hyperbolic, LogCothSeriesMatchesFunction) {
    const LogCothSeries s = log_coth_series(30);
    for (double u : {0.05, 0.3, 1.0, 2.0}) EXPECT_NEAR(s.evaluate(u), std::log(1.0 / std::tanh(u / 2)), 1e-11) << u;
    EXPECT_THROW(s.evaluate(3.5), regime_error);
    EXPECT_THROW(s.evaluate(0.0), usage_error);
}

TEST(Hyperbolic, CschSeriesAndDerivatives) {
    const LaurentSeries cs = csch_series(25);
    for (double x : {0.1, 0.7, 1.5}) {
        EXPECT_NEAR(cs.evaluate(x), 1.0 / std::sinh(x), 1e-12) << x;
        for (int r : {1, 3, 5})
            EXPECT_NEAR(csch_derivative_series(r, x), hyper_evaluate(csch_derivative(r), x),
                        1e-9 * std::fabs(hyper_evaluate(csch_derivative(r), x)))
                << "r = " << r << ", x = " << x;
    }
    EXPECT_THROW(csch_derivative_series(1, 4.0), regime_error);
}

TEST(Hyperbolic, SymbolicDerivativeMatchesFiniteDifference) {
    const HyperPoly p = HyperPoly::symbol("xi", 2) * HyperPoly::symbol("coth") * HyperPoly::symbol("csch", 2);
    const double x = 0.8, h = 1e-5;
    const double fd = (hyper_evaluate(p, x + h) - hyper_evaluate(p, x - h)) / (2 * h);
    EXPECT_NEAR(hyper_evaluate(hyper_diff(p), x), fd, 1e-8);
}

TEST(ChannelCoefficients, CancelDominantSquareTerms) {
    for (int k = 2; k <= 10; k += 2)
        EXPECT_EQ(channel_leading_term(k).coefficient + square_dominant_coefficient(quartic_decomposition(k)), 0)
            << "k = " << k;
    EXPECT_EQ(channel_leading_term(2).coefficient, Rational(1, 12));
    EXPECT_EQ(channel_leading_term(10).coefficient, Rational(73, 8758886400));
    EXPECT_EQ(*channel_leading_term(0).log_coefficient, 4);
    EXPECT_THROW(channel_leading_term(3), usage_error);
}

TEST(ChannelCoefficients, LinearOperatorFromClosedForm) {
    // Airy-type recursion for V = alpha x: the k-th coefficient is (1/24)^{k/2} / (k/2)!.
    const auto r = linear_operator_coefficients(8);
    for (int k = 2; k <= 8; k += 2)
        EXPECT_EQ(r.at(k), rational_pow(Rational(1, 24), k / 2) / Rational(factorial(k / 2))) << "k = " << k;
}

TEST(ChannelCoefficients, MultiplicityAppliedOnce) {
    ChannelSeries s = channel_series_coefficients(4);
    EXPECT_EQ(s.channels, kChannelCount);
    EXPECT_THROW(apply_channel_multiplicity(s), error);
}

TEST(ChannelSeries, ClosedFormAgreesWithSeries) {
    const ModelParams p(1, 1, 0.1, 12);  // u = 0.6
    const ChannelSeries s = channel_partition(8, p);
    EXPECT_NEAR(s.u, 0.6, 1e-15);
    EXPECT_NEAR(s.value(), s.value_series(), 1e-12 * std::fabs(s.value()));
}

TEST(ChannelSeries, RegimeRefusals) {
    EXPECT_THROW(channel_partition(8, ModelParams(1, 1, 0.1, 70)), regime_error);  // u = 3.5
    EXPECT_THROW(channel_partition(8, ModelParams(1, 1, 0.1, 2)), regime_error);   // g^2 t Q^4 = 1.6
    EXPECT_THROW(channel_partition(5, ModelParams(1, 1, 0.1, 12)), usage_error);
    EXPECT_THROW(z_channels_leading(10, ModelParams(1, 1, 0.1, 12)), usage_error);
}

TEST(QIndependent, ThreeRoutesAgree) {
    for (int n = 1; n <= 6; ++n) {
        const Rational closed = channel_q_coefficient_closed(n);
        EXPECT_EQ(channel_q_coefficient_double_factorial(n), closed) << "n = " << n;
        EXPECT_EQ(channel_q_coefficient_derivative(n), closed) << "n = " << n;
    }
    EXPECT_EQ(channel_q_coefficient_closed(1), Rational(1, 144));
}

TEST(QIndependent, LogDomainTermsMatchExactCoefficients) {
    const AsymptoticSeries s = channel_q_independent(60, 0.5, 60);
    for (const auto& t : s.terms) {
        ASSERT_TRUE(t.coefficient.has_value());
        EXPECT_NEAR(static_cast<double>(t.log_abs), ln_abs(*t.coefficient) + t.n * std::log(0.5), 1e-10) << t.n;
        EXPECT_EQ(t.sign, *t.coefficient > 0 ? 1 : -1) << t.n;
    }
    for (int n = 1; n <= 30; ++n)
        EXPECT_NEAR(static_cast<double>(log_abs_bernoulli(n)), ln_abs(bernoulli(2 * n)), 1e-10) << n;
}

TEST(QIndependent, OptimalTruncationNearBernoulliEstimate) {
    const double l2 = 1.0;
    const AsymptoticSeries s = channel_q_independent(400, l2, 0);
    ASSERT_TRUE(s.minimum_found);
    const double estimate = 24 * M_PI * M_PI / l2;
    EXPECT_LT(std::fabs(s.optimal_index - estimate) / estimate, 0.02);
    EXPECT_LT(s.first_omitted, 1e-80);
    EXPECT_NEAR(s.partial_sum, s.terms[s.optimal_index - 1].cumulative, 0.0);
}

TEST(QIndependent, BernoulliGrowthRatio) {
    // |B_{2n+2} / B_{2n}| -> (2n+1)(2n+2) / (2 pi)^2
    for (int n = 12; n <= 30; ++n) {
        const double ratio = std::fabs(to_double(bernoulli(2 * n + 2) / bernoulli(2 * n)));
        const double predicted = (2.0 * n + 1) * (2.0 * n + 2) / (4 * M_PI * M_PI);
        EXPECT_LT(std::fabs(ratio / predicted - 1), 0.01) << n;
    }
    EXPECT_THROW(channel_q_independent(0, 0.1), usage_error);
    EXPECT_THROW(channel_q_independent(5, -0.1), usage_error);
}

TEST(ZetaIntegrals, MonomialsAgainstQuadrature) {
    const std::vector<std::array<int, 3>> cases{{2, 1, 0}, {3, 1, 1}, {3, 2, 0}, {4, 3, 0}, {5, 2, 2}, {6, 3, 1}};
    for (const auto& [n, a, b] : cases) {
        auto f = [&](double x) {
            if (x > 300) return 0.0;
            return std::pow(x, n) * std::pow(1 / std::sinh(x), a) * std::pow(1 / std::tanh(x), b);
        };
        const double q = integrate_adaptive(f, 1e-300, 1.0, {1e-14, 1e-13, 100000}).value +
                         integrate_to_infinity(f, 1.0, {1e-14, 1e-13, 100000}).value;
        EXPECT_NEAR(static_cast<double>(integrate_monomial(n, a, b).evaluate()), q, 1e-11 * std::fabs(q))
            << n << "," << a << "," << b;
    }
    const ZetaCombination z = integrate_monomial(2, 1, 0);
    EXPECT_EQ(z.rational, 0);
    EXPECT_EQ(z.coefficient(3), Rational(7, 2));
    EXPECT_THROW(integrate_monomial(1, 1, 1), usage_error);
    EXPECT_THROW(integrate_monomial(3, 0, 1), usage_error);
}

TEST(FreeChannel, ConstantAndLowerLimitTerm) {
    const ModelParams p(1, 1, 0.01, 2);
    const FreeChannelResult r = z2_free_channel(p);
    EXPECT_EQ(r.constant.rational, 0);
    EXPECT_EQ(r.constant.coefficient(3), -21);
    EXPECT_EQ(r.constant.str(), "(-21)*zeta(3)");
    EXPECT_EQ(r.hgtq2_coefficient, Rational(1, 12));
    EXPECT_EQ(r.hgtq2_coefficient + zk_square(2, p).coefficient, 0);
    EXPECT_THROW(z2_free_channel(ModelParams(1, 1, 0.1, 30)), regime_error);
}

// The symbolic assembly and the hand-written oracle integrand are the same function.
TEST(FreeChannel, SymbolicIntegrandMatchesOracle) {
    const FreeChannelResult r = z2_free_channel(ModelParams(1, 1, 0.01, 2));
    for (double xi : {0.01, 0.2, 1.0, 3.0, 9.0})
        EXPECT_NEAR(hyper_evaluate(r.leading_integrand, xi), z2_channel_integrand(xi),
                    1e-12 * (1 + std::fabs(z2_channel_integrand(xi))))
            << xi;
}

TEST(FreeChannel, QuadratureApproachesExactLimitAtFourthOrder) {
    auto deviation = [](double xi0) {
        // (hbar g t Q)^2 / 12 with hbar g t Q = 2 xi0
        return quad_z2_channel(xi0).value - (-21 * kZeta3 + xi0 * xi0 / 3);
    };
    const double d1 = deviation(0.04), d2 = deviation(0.02);
    EXPECT_NEAR(d1 / d2, 16.0, 0.8);
    EXPECT_LT(std::fabs(deviation(1e-6)), 1e-9);
    EXPECT_THROW(quad_z2_channel(0.5), usage_error);
}
