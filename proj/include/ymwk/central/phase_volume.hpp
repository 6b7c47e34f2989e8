#pragma once

#include <cmath>

#include "ymwk/error.hpp"

namespace ymwk {

// 2 pi * area{(x,y) in [-L,L]^2 : g^2 x^2 y^2 / 2 < E}. The boundary is |x y| = c0 with
// c0 = sqrt(2E)/g; per quadrant the area is c0 (1 + ln(L^2/c0)) once the hyperbola
// crosses the box, and the whole box otherwise.
inline double classical_phase_volume(double E, double L, double g) {
    if (!(E > 0)) throw usage_error("phase volume needs E > 0");
    if (!(L > 0) || !(g > 0)) throw usage_error("phase volume needs L > 0 and g > 0");
    const double c0 = std::sqrt(2.0 * E) / g;
    if (L * L <= c0) return 2.0 * M_PI * 4.0 * L * L;
    return 2.0 * M_PI * 4.0 * c0 * (1.0 + std::log(L * L / c0));
}

// Exact increment on doubling L in the crossing regime: 16 pi sqrt(2E)/g ln 2.
inline double phase_volume_doubling_increment(double E, double g) {
    return 16.0 * M_PI * std::sqrt(2.0 * E) / g * std::log(2.0);
}

}  // namespace ymwk
