#pragma once

#include <cmath>
#include <random>
#include <sstream>

#include "ymwk/central/params.hpp"
#include "ymwk/quadrature.hpp"

namespace ymwk {

// 4 int_0^Q int_0^Q x^{2m} y^{2n} exp(-t g^2 x^2 y^2 / 2) dx dy by nested adaptive quadrature.
// The inner tolerance is tightened so that its error stays below the outer budget.
inline QuadResult quad_imn(int m, int n, const ModelParams& p, const QuadOptions& opt = {}) {
    if (m < 0 || n < 0) throw usage_error("quad_imn needs m, n >= 0");
    const double c = 0.5 * p.t * p.g * p.g;
    const double Q = p.Q;
    QuadOptions inner_opt{opt.abs_tol * 1e-3 / Q, opt.rel_tol * 1e-2, opt.max_intervals};
    int total = 0;
    auto inner = [&](double x) {
        auto f = [&](double y) { return std::pow(y, 2 * n) * std::exp(-c * x * x * y * y); };
        // The Gaussian in y has width 1/(x sqrt c); split there so narrow peaks are resolved.
        const double w = x > 0 ? std::min(Q, 8.0 / (x * std::sqrt(c))) : Q;
        QuadResult r = integrate_adaptive(f, 0.0, w, inner_opt);
        if (w < Q) {
            QuadResult r2 = integrate_adaptive(f, w, Q, inner_opt);
            r.value += r2.value;
            r.intervals += r2.intervals;
        }
        total += r.intervals;
        return std::pow(x, 2 * m) * r.value;
    };
    QuadResult outer = integrate_adaptive(inner, 0.0, Q, opt);
    outer.value *= 4.0;
    outer.error *= 4.0;
    outer.intervals += total;
    return outer;
}

struct MonteCarloEstimate {
    double value = 0.0;
    double standard_error = 0.0;
    long samples = 0;
};

// Monte-Carlo estimate of I_mn: x uniform on (0, Q), y from the half-normal of width
// 1/(x sqrt(t g^2)) truncated to (0, Q), so the Gaussian factor is sampled exactly.
inline MonteCarloEstimate mc_imn(int m, int n, const ModelParams& p, long samples, unsigned long seed) {
    if (m < 0 || n < 0) throw usage_error("mc_imn needs m, n >= 0");
    if (samples < 2) throw usage_error("Monte-Carlo needs at least two samples");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double c = 0.5 * p.t * p.g * p.g, Q = p.Q;
    double mean = 0, m2 = 0;
    for (long s = 0; s < samples; ++s) {
        const double x = Q * uni(rng);
        // int_0^Q exp(-c x^2 y^2) dy = sqrt(pi)/(2 x sqrt c) erf(x sqrt(c) Q)
        const double a = x * std::sqrt(c);
        const double mass = a > 0 ? std::sqrt(M_PI) / (2.0 * a) * std::erf(a * Q) : Q;
        double y;
        if (a > 0) {
            // inverse-CDF sampling of the truncated Gaussian
            const double target = uni(rng) * std::erf(a * Q);
            double lo = 0, hi = Q;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                (std::erf(a * mid) < target ? lo : hi) = mid;
            }
            y = 0.5 * (lo + hi);
        } else {
            y = Q * uni(rng);
        }
        const double v = 4.0 * Q * std::pow(x, 2 * m) * std::pow(y, 2 * n) * mass;
        const double d = v - mean;
        mean += d / (s + 1);
        m2 += d * (v - mean);
    }
    return {mean, std::sqrt(m2 / (samples - 1) / samples), samples};
}

// Leading free-channel integrand (all four channels, units of K):
//   4 xi^2 [-csch + (11/6) xi csch coth - (1/2) xi^2 csch - xi^2 csch^3].
inline double z2_channel_integrand(double xi) {
    if (xi > 700.0) return 0.0;
    const double cs = 1.0 / std::sinh(xi), ct = 1.0 / std::tanh(xi);
    return 4.0 * xi * xi * (-cs + 11.0 / 6.0 * xi * cs * ct - 0.5 * xi * xi * cs - xi * xi * cs * cs * cs);
}

// int_{xi0}^inf of the free-channel integrand.
inline QuadResult quad_z2_channel(double xi0, const QuadOptions& opt = {1e-13, 1e-12, 1'000'000}) {
    if (!(xi0 > 0) || !(xi0 < 0.1)) throw usage_error("quad_z2_channel needs 0 < xi0 < 0.1");
    // Refuse integrands that have not decayed by xi = 50.
    const double probe = std::fabs(z2_channel_integrand(50.0)) + std::fabs(z2_channel_integrand(60.0));
    if (!(probe < 1e-12)) {
        std::ostringstream os;
        os << "channel integrand does not decay: |f(50)| + |f(60)| = " << probe;
        throw numeric_error(os.str());
    }
    QuadResult head = integrate_adaptive(z2_channel_integrand, xi0, 1.0, opt);
    QuadResult mid = integrate_adaptive(z2_channel_integrand, 1.0, 50.0, opt);
    QuadResult tail = integrate_to_infinity(z2_channel_integrand, 50.0, {1e-25, 1e-10, 10000});
    return {head.value + mid.value + tail.value, head.error + mid.error + tail.error,
            head.intervals + mid.intervals + tail.intervals};
}

}  // namespace ymwk
