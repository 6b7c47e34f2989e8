#pragma once

#include <lapacke.h>

#include <cmath>
#include <vector>

#include <boost/math/special_functions/airy.hpp>

#include "ymwk/spectral/hamiltonian.hpp"

namespace ymwk {

// k-th zero of Ai (k >= 1, negative): asymptotic initial guess refined by Newton steps.
inline double airy_ai_zero(int k) {
    if (k < 1) throw usage_error("Airy zero index must be >= 1");
    const double s = 3.0 * M_PI / 8.0 * (4.0 * k - 1.0);
    const double s2 = 1.0 / (s * s);
    double z = -std::pow(s, 2.0 / 3.0) *
               (1.0 + s2 * (5.0 / 48.0 - s2 * (5.0 / 36.0 - s2 * 77125.0 / 82944.0)));
    for (int it = 0; it < 50; ++it) {
        const double step = boost::math::airy_ai(z) / boost::math::airy_ai_prime(z);
        z -= step;
        if (std::fabs(step) < 1e-15 * std::fabs(z)) break;
    }
    return z;
}

// Levels of -(hbar^2/2) d^2/dx^2 + slope x on x > wall with a hard wall:
//   E_k = slope * wall + (slope^2 hbar^2 / 2)^{1/3} (-z_k).
inline std::vector<double> linear_wall_levels(double slope, int count, double hbar, double wall) {
    if (count < 1) throw usage_error("count must be >= 1");
    if (!(slope > 0) || !(hbar > 0)) throw usage_error("slope and hbar must be positive");
    const double scale = std::cbrt(slope * slope * hbar * hbar / 2.0);
    std::vector<double> out;
    for (int k = 1; k <= count; ++k) out.push_back(slope * wall + scale * -airy_ai_zero(k));
    return out;
}

// Channel mode n_mode: slope a_n = (n + 1/2) hbar g.
inline std::vector<double> airy_levels(int n_mode, int count, double hbar, double g, double domain_start) {
    if (n_mode < 0) throw usage_error("mode index must be >= 0");
    return linear_wall_levels((n_mode + 0.5) * hbar * g, count, hbar, domain_start);
}

namespace detail {

// Lowest levels of the three-point finite-difference operator with n interior points on
// (wall, wall + length).
inline std::vector<double> fd_linear_levels(double slope, int count, double hbar, double wall, double length, int n) {
    const double h = length / (n + 1);
    const double kin = hbar * hbar / (2.0 * h * h);
    std::vector<double> d(n), e(n > 1 ? n - 1 : 1, -kin), w(n);
    for (int i = 0; i < n; ++i) d[i] = 2.0 * kin + slope * (wall + (i + 1) * h);
    lapack_int m = 0;
    std::vector<lapack_int> isuppz(2 * n);
    double z = 0;
    const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'N', 'I', n, d.data(), e.data(), 0, 0, 1, count, 0.0, &m,
                                           w.data(), &z, 1, isuppz.data());
    if (info != 0) throw numeric_error("dstevr failed with info = " + std::to_string(info));
    w.resize(m);
    return w;
}

}  // namespace detail

// Finite-difference oracle with one Richardson step in the spacing (error O(h^4)).
// The box extends ten decay lengths past the classical turning point of the highest level.
inline std::vector<double> linear_wall_levels_fd(double slope, int count, double hbar, double wall, int points = 4000) {
    if (count < 1 || points < 4 * count) throw usage_error("finite-difference oracle needs points >= 4 count");
    const double ell = std::cbrt(hbar * hbar / (2.0 * slope));
    const double e_top = std::cbrt(slope * slope * hbar * hbar / 2.0) * -airy_ai_zero(count);
    const double length = e_top / slope + 12.0 * ell;
    const auto coarse = detail::fd_linear_levels(slope, count, hbar, wall, length, points - 1);
    const auto fine = detail::fd_linear_levels(slope, count, hbar, wall, length, 2 * points - 1);
    std::vector<double> out(count);
    for (int k = 0; k < count; ++k) out[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
    return out;
}

// Sinc-DVR matrix of the same operator: odd-parity sector of slope |x - wall|, which vanishes at the wall.
inline SymMatrix linear_wall_dvr(double slope, double hbar, double wall, double spacing, int points) {
    if (points < 1 || !(spacing > 0)) throw usage_error("DVR needs points >= 1 and positive spacing");
    const Parity odd = Parity::odd;
    const Axis1D ax = detail::grid_axis(points, spacing, hbar, &odd);
    SymMatrix H(points);
    for (int i = 0; i < points; ++i) {
        for (int j = 0; j < points; ++j) H(i, j) = ax.kinetic[i][j];
        H(i, i) += slope * (wall + ax.coordinate[i]);
    }
    return H;
}

}  // namespace ymwk
