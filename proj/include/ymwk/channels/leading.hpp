#pragma once

#include <cmath>
#include <optional>

#include "ymwk/channels/adiabatic.hpp"
#include "ymwk/series.hpp"

namespace ymwk {

// coefficient * K (hbar g t Q)^k; for k = 0 the term is K * log_coefficient * ln(4/(hbar g t Q)).
struct ChannelTerm {
    int k = 0;
    Rational coefficient;
    std::optional<Rational> log_coefficient;

    double value(const ModelParams& p) const {
        if (k == 0) return p.K() * to_double(*log_coefficient) * std::log(4.0 / p.hgtQ());
        return p.K() * to_double(coefficient) * std::pow(p.hgtQ(), k);
    }
};

// Powers of (hbar g t Q) from the expansion of the channel log term
// 4 ln coth(u/2), u = hbar g t Q / 2.
inline ChannelTerm channel_leading_term(int k) {
    if (k < 0 || k % 2) throw usage_error("channel leading terms exist for even k >= 0");
    const ChannelSeries s = channel_series_coefficients(0);
    if (k == 0) return {0, Rational(0), -s.log_term * log_coth_series(1).log_coefficient};
    const LogCothSeries lc = log_coth_series(k / 2);
    return {k, s.log_term * lc.powers.at(k) / Rational(pow2(k)), std::nullopt};
}

inline ChannelTerm z_channels_leading(int k, const ModelParams& p) {
    if (k != 0 && k != 2 && k != 4 && k != 6 && k != 8) throw usage_error("z_channels_leading supports k in {0,2,4,6,8}");
    p.require_series();
    return channel_leading_term(k);
}

// Q-independent channel term of order lambda^{2n}, three ways.
// Closed form: 4 (2^{2n-1}-1) B_{2n} / (2^n n! n 48^n).
inline Rational channel_q_coefficient_closed(int n) {
    if (n < 1) throw usage_error("n must be >= 1");
    return Rational(4) * Rational(pow2(2 * n - 1) - 1) * bernoulli(2 * n) /
           (Rational(pow2(n)) * Rational(factorial(n)) * Rational(n) * rational_pow(Rational(48), n));
}

// Double-factorial form: 2^{2n}(2^{2n-1}-1)(2n-1)!! B_{2n} / (2^{2(n-1)} n (2n)! 48^n).
inline Rational channel_q_coefficient_double_factorial(int n) {
    if (n < 1) throw usage_error("n must be >= 1");
    return Rational(pow2(2 * n)) * Rational(pow2(2 * n - 1) - 1) * Rational(double_factorial(2 * n - 1)) *
           bernoulli(2 * n) /
           (Rational(pow2(2 * (n - 1))) * Rational(n) * Rational(factorial(2 * n)) * rational_pow(Rational(48), n));
}

// From the derivative series: minus the constant Laurent coefficient of
// coefficient_n * d^{2n-1} csch, with coefficient_n from the linear WK pipeline.
inline Rational channel_q_coefficient_derivative(int n) {
    if (n < 1) throw usage_error("n must be >= 1");
    const ChannelSeries s = channel_series_coefficients(2 * n);
    const ChannelDerivativeTerm& d = s.derivative_terms.back();
    LaurentSeries cs = csch_series(n + 1);
    for (int r = 0; r < d.derivative_order; ++r) cs = cs.derivative();
    return -d.coefficient * cs.coefficient(0);
}

// ln|B_{2n}| = ln 2 + ln (2n)! - 2n ln(2 pi) + ln zeta(2n)
inline long double log_abs_bernoulli(int n) {
    const long double z = n <= 40 ? std::log(static_cast<long double>(zeta<HighFloat>(2 * n)))
                                  : std::log1p(std::pow(2.0L, -2.0L * n) + std::pow(3.0L, -2.0L * n));
    return std::log(2.0L) + std::lgamma(2.0L * n + 1.0L) - 2.0L * n * std::log(2.0L * M_PIl) + z;
}

// Series in lambda^{2n} (units of K) with terms evaluated in the log domain so that it can be
// followed well past the optimal truncation point. Exact coefficients are attached for n <= exact_limit.
inline AsymptoticSeries channel_q_independent(int nmax, double lambda2, int exact_limit = 60) {
    if (nmax < 1) throw usage_error("nmax must be >= 1");
    if (!(lambda2 > 0)) throw usage_error("lambda^2 must be positive");
    AsymptoticSeries s;
    s.lambda2 = lambda2;
    s.terms.reserve(nmax);
    const long double l2 = std::log(static_cast<long double>(lambda2));
    for (int n = 1; n <= nmax; ++n) {
        SeriesTerm t;
        t.n = n;
        t.lambda_power = 2 * n;
        // ln 4 + ln(2^{2n-1} - 1) + ln|B_{2n}| - n ln 96 - ln n! - ln n
        const long double lw = (2.0L * n - 1.0L) * std::log(2.0L) + std::log1p(-std::pow(2.0L, 1.0L - 2.0L * n));
        const long double lc = std::log(4.0L) + lw + log_abs_bernoulli(n) - n * std::log(96.0L) -
                               std::lgamma(n + 1.0L) - std::log(static_cast<long double>(n));
        t.sign = (n % 2 == 1) ? 1 : -1;
        t.log_abs = lc + n * l2;
        t.value = t.sign * static_cast<double>(std::exp(t.log_abs));
        t.coefficient_value = t.sign * static_cast<double>(std::exp(lc));
        if (n <= exact_limit) {
            t.coefficient = channel_q_coefficient_closed(n);
            t.coefficient_value = to_double(*t.coefficient);
        }
        s.terms.push_back(std::move(t));
    }
    apply_truncation(s);
    return s;
}

}  // namespace ymwk
