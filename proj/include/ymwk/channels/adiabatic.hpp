#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "ymwk/central/params.hpp"
#include "ymwk/channels/hyperbolic.hpp"
#include "ymwk/wk/momentum.hpp"
#include "ymwk/wk/recursion.hpp"

namespace ymwk {

inline constexpr int kChannelCount = 4;

// Transverse level (n + 1/2) hbar g x, the effective linear potential of a channel.
inline double adiabatic_level(int n, double x, const ModelParams& p) {
    if (n < 0) throw usage_error("mode index must be nonnegative");
    if (!(x > 0)) throw usage_error("channel position must be positive");
    return (n + 0.5) * p.hbar * p.g * x;
}

// r_k with momentum-reduced W_k = r_k alpha^k t^{3k/2} for V = alpha x, so that the
// k-th order acts as r_k hbar^k t^{k/2} d^k/dx^k on exp(-t alpha x).
inline std::map<int, Rational> linear_operator_coefficients(int kmax) {
    if (kmax < 0 || kmax % 2) throw usage_error("linear operator coefficients need even kmax >= 0");
    static std::mutex mu;
    static std::map<int, Rational> cache;
    static int cached_kmax = -1;
    {
        std::lock_guard lock(mu);
        if (cached_kmax >= kmax) {
            std::map<int, Rational> out;
            for (const auto& [k, r] : cache)
                if (k <= kmax) out.emplace(k, r);
            return out;
        }
    }
    const std::size_t A = PhasePoly::index_of("alpha"), T = PhasePoly::index_of("t");
    WkSequence seq = wk_sequence(PotentialSpec::linear_alpha(), kmax);
    std::map<int, Rational> out;
    for (int k = 2; k <= kmax; k += 2) {
        PhasePoly red = reduce_momentum(seq.orders[k], 1).integrand;
        if (red.size() != 1) throw error("linear W_" + std::to_string(k) + " does not reduce to a single monomial");
        const auto& [e, c] = *red.terms().begin();
        PhasePoly::Exponents expect{};
        expect[A] = k;
        expect[T] = 3 * k / 2;
        if (e != expect || !c.is_real()) throw error("linear W_" + std::to_string(k) + " has unexpected structure");
        out[k] = c.re();
    }
    for (int k = 1; k <= kmax; k += 2)
        if (!reduce_momentum(seq.orders[k], 1).integrand.is_zero())
            throw error("odd linear order survives momentum reduction");
    std::lock_guard lock(mu);
    if (kmax > cached_kmax) {
        cache = out;
        cached_kmax = kmax;
    }
    return out;
}

// One term -coefficient * lambda^{lambda_power} * d^{order} csch (u).
struct ChannelDerivativeTerm {
    int lambda_power = 0;
    Rational coefficient;
    int derivative_order = 0;
};

// Z^{[Q,inf]} / K = log_term * ln coth(u/2) - sum coefficient lambda^{p} csch^{(order)}(u).
struct ChannelSeries {
    Rational log_term;
    std::vector<ChannelDerivativeTerm> derivative_terms;
    double u = 0.0;
    double lambda2 = 0.0;
    int channels = 1;  // number of channels folded into the coefficients

    // Closed-form derivatives (polynomials in coth and csch).
    double value() const {
        double s = to_double(log_term) * std::log(1.0 / std::tanh(u / 2.0));
        for (const auto& d : derivative_terms)
            s -= to_double(d.coefficient) * std::pow(lambda2, d.lambda_power / 2) *
                 hyper_evaluate(csch_derivative(d.derivative_order), u);
        return s;
    }
    // Same quantity with the Bernoulli expansions, valid for u < pi.
    double value_series(int order = 40) const {
        double s = to_double(log_term) * log_coth_series(order).evaluate(u);
        for (const auto& d : derivative_terms)
            s -= to_double(d.coefficient) * std::pow(lambda2, d.lambda_power / 2) *
                 csch_derivative_series(d.derivative_order, u, order);
        return s;
    }
};

inline void apply_channel_multiplicity(ChannelSeries& s) {
    if (s.channels != 1) throw error("channel multiplicity already applied");
    s.log_term *= kChannelCount;
    for (auto& d : s.derivative_terms) d.coefficient *= kChannelCount;
    s.channels = kChannelCount;
}

// Mode sum: sum_n alpha_n^j e^{-t alpha_n x} with alpha_n = (n+1/2) hbar g equals
// (hbar g)^j (-1/2)^j d^j/dxi^j [csch(xi)/2]; integrating x from Q to infinity leaves
// -(1/2) d^{j-1} csch at xi0 = u. Per order k the K-unit coefficient of
// -lambda^k d^{k-1} csch(u) is 4 r_k / 2^k after the channel multiplicity.
inline ChannelSeries channel_series_coefficients(int kmax) {
    if (kmax < 0 || kmax % 2) throw usage_error("channel series needs even kmax >= 0");
    ChannelSeries s;
    s.log_term = 1;  // int_{xi0}^inf csch = ln coth(xi0/2), per channel
    for (const auto& [k, r] : linear_operator_coefficients(kmax))
        s.derivative_terms.push_back({k, r / Rational(pow2(k)), k - 1});
    apply_channel_multiplicity(s);
    return s;
}

inline ChannelSeries channel_partition(int kmax, const ModelParams& p) {
    if (kmax != 0 && kmax != 2 && kmax != 4 && kmax != 6 && kmax != 8)
        throw usage_error("channel_partition supports kmax in {0,2,4,6,8}");
    p.require_all();
    ChannelSeries s = channel_series_coefficients(kmax);
    s.u = p.u();
    s.lambda2 = p.lambda2();
    return s;
}

}  // namespace ymwk
