#pragma once

#include <cmath>
#include <sstream>

#include <boost/math/special_functions/digamma.hpp>

#include "ymwk/constants.hpp"
#include "ymwk/quadrature.hpp"
#include "ymwk/spectral/eigen.hpp"

namespace ymwk {

enum class TailModel { none, improved_tf };

// Level density of the x^2 y^2 Hamiltonian obtained by inverting the improved
// Thomas-Fermi heat kernel K [ln(1/lambda^2) + 9 ln 2 + C]:
//   rho(E) = A E^{1/2} / Gamma(3/2) [3 (ln E - psi(3/2)) + 9 ln 2 + C - ln(g^2 hbar^4)],
//   A = 1 / (sqrt(2 pi) g hbar^2).
inline double tf_level_density(double E, double g, double hbar) {
    if (!(E > 0)) return 0.0;
    const double A = 1.0 / (std::sqrt(2.0 * M_PI) * g * hbar * hbar);
    const double c = 9.0 * std::log(2.0) + static_cast<double>(euler_gamma()) - std::log(g * g * std::pow(hbar, 4));
    const double bracket = 3.0 * (std::log(E) - boost::math::digamma(1.5)) + c;
    return A * std::sqrt(E) / std::tgamma(1.5) * bracket;
}

// Level count N(E) = int_0^E rho.
inline double tf_level_count(double E, double g, double hbar) {
    if (!(E > 0)) return 0.0;
    const double A = 1.0 / (std::sqrt(2.0 * M_PI) * g * hbar * hbar);
    const double c = 9.0 * std::log(2.0) + static_cast<double>(euler_gamma()) - std::log(g * g * std::pow(hbar, 4));
    const double bracket = 3.0 * (std::log(E) - boost::math::digamma(2.5)) + c;
    return A * std::pow(E, 1.5) / std::tgamma(2.5) * bracket;
}

struct SpectralZ {
    double t = 0.0;
    double value = 0.0;        // sum + tail
    double sum = 0.0;          // sum over computed levels
    double tail = 0.0;         // continuation beyond the last complete level
    double convergence = 0.0;  // sum t e^{-t E_n} |dE_n|
    double error_band = 0.0;   // tail + convergence
    std::size_t levels = 0;

    friend bool operator==(const SpectralZ&, const SpectralZ&) = default;
};

// Z(t) = sum e^{-t E_n} over the spectrum. Without a tail model the spectrum must reach far
// enough that e^{-t E_max} < tail_tolerance; otherwise the improved-TF density supplies the
// remainder above the completeness edge.
inline SpectralZ z_spectral(const Spectrum& s, double t, TailModel model, double tail_tolerance = 1e-10) {
    if (!(t > 0)) throw usage_error("t must be positive");
    if (s.eigenvalues.empty()) throw usage_error("empty spectrum");
    SpectralZ z;
    z.t = t;
    z.levels = s.size();
    const double e0 = s.eigenvalues.front();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double w = std::exp(-t * s.eigenvalues[i]);
        z.sum += w;
        if (i < s.convergence.size()) z.convergence += t * w * s.convergence[i];
    }
    const double edge = std::isfinite(s.complete_below) ? s.complete_below : s.eigenvalues.back();
    const double weight = std::exp(-t * (edge - e0));
    if (weight >= tail_tolerance) {
        if (model == TailModel::none) {
            std::ostringstream os;
            os << "spectrum ends at E = " << edge << " where exp(-t (E - E0)) = " << weight << " >= tail tolerance "
               << tail_tolerance << "; use the improved-TF tail model";
            throw regime_error(os.str());
        }
        auto f = [&](double E) { return tf_level_density(E, s.g, s.hbar) * std::exp(-t * E); };
        z.tail = integrate_to_infinity(f, edge, {1e-14, 1e-10, 100000}).value;
        if (!(z.tail < z.sum)) {
            std::ostringstream os;
            os << "regime not resolvable: estimated tail " << z.tail << " exceeds the resolved sum " << z.sum
               << " at t = " << t;
            throw regime_error(os.str());
        }
    }
    z.value = z.sum + z.tail;
    z.error_band = z.tail + z.convergence;
    return z;
}

}  // namespace ymwk
