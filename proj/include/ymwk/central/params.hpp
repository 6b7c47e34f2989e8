#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "ymwk/error.hpp"

namespace ymwk {

// Numerical stand-ins for the "much greater / much less" validity conditions.
struct ValidityThresholds {
    double adiabatic_min = 100.0;  // g^2 t Q^4
    double wigner_max = 0.5;       // hbar t^{3/4}
    double series_max = M_PI;      // u = hbar g t Q / 2
};

struct ModelParams {
    double g = 1.0;
    double hbar = 1.0;
    double t = 1.0;
    double Q = 10.0;
    ValidityThresholds thresholds{};

    ModelParams() = default;
    ModelParams(double g_, double hbar_, double t_, double Q_) : g(g_), hbar(hbar_), t(t_), Q(Q_) { validate(); }

    void validate() const {
        if (!(g > 0) || !(hbar > 0) || !(t > 0) || !(Q > 0))
            throw usage_error("model parameters g, hbar, t, Q must all be positive");
    }

    // K = (2 pi g^2 hbar^4 t^3)^{-1/2}
    double K() const { return 1.0 / std::sqrt(2.0 * M_PI * g * g * std::pow(hbar, 4) * t * t * t); }
    double lambda2() const { return g * g * std::pow(hbar, 4) * t * t * t; }
    double hgtQ() const { return hbar * g * t * Q; }
    double u() const { return hgtQ() / 2.0; }
    double xi0() const { return u(); }
    double adiabatic_parameter() const { return g * g * t * std::pow(Q, 4); }
    double wigner_parameter() const { return hbar * std::pow(t, 0.75); }

    bool adiabatic_ok() const { return adiabatic_parameter() >= thresholds.adiabatic_min; }
    bool wigner_ok() const { return wigner_parameter() <= thresholds.wigner_max; }
    bool series_ok() const { return u() < thresholds.series_max; }

    void require_adiabatic() const {
        if (!adiabatic_ok()) {
            std::ostringstream os;
            os << "adiabatic condition violated: g^2 t Q^4 = " << adiabatic_parameter() << " < "
               << thresholds.adiabatic_min;
            throw regime_error(os.str());
        }
    }
    void require_wigner() const {
        if (!wigner_ok()) {
            std::ostringstream os;
            os << "semiclassical condition violated: hbar t^(3/4) = " << wigner_parameter() << " > "
               << thresholds.wigner_max;
            throw regime_error(os.str());
        }
    }
    void require_series() const {
        if (!series_ok()) {
            std::ostringstream os;
            os << "series condition violated: u = hbar g t Q / 2 = " << u() << " >= " << thresholds.series_max;
            throw regime_error(os.str());
        }
    }
    void require_all() const {
        require_adiabatic();
        require_wigner();
        require_series();
    }
};

}  // namespace ymwk
