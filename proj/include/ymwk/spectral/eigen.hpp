#pragma once

#include <cblas.h>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ymwk/spectral/hamiltonian.hpp"

namespace ymwk {

struct Spectrum {
    std::vector<double> eigenvalues;   // ascending
    std::vector<double> convergence;   // per level, |E_n - E_n(other basis)|; empty if not compared
    std::vector<double> residuals;     // iterative solver residual norms; empty for the dense solver
    std::string basis;
    std::size_t basis_size = 0;
    std::string solver;
    double complete_below = std::numeric_limits<double>::infinity();  // all levels below this are present
    double g = 1.0;
    double hbar = 1.0;

    std::size_t size() const { return eigenvalues.size(); }
    double ground() const {
        if (eigenvalues.empty()) throw usage_error("empty spectrum");
        return eigenvalues.front();
    }
    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

struct EigenOptions {
    std::size_t dense_limit = 3000;  // iterative solver above this size
    int lanczos_max_count = 64;      // larger requests always go dense
    double tolerance = 1e-10;        // relative residual for Ritz pairs
    int max_steps = 0;               // 0: min(n, max(400, 12 count))
    unsigned long seed = 20240601UL;
};

namespace detail {

inline std::vector<double> dense_eigenvalues(const SymMatrix& H, char range, double vl, double vu, int il, int iu) {
    const lapack_int n = lapack_int(H.size());
    std::vector<double> a(H.data(), H.data() + H.size() * H.size());
    std::vector<double> w(n);
    std::vector<lapack_int> isuppz(2 * std::max<lapack_int>(n, 1));
    double z = 0;
    lapack_int m = 0;
    const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'N', range, 'U', n, a.data(), n, vl, vu, il, iu, 0.0, &m,
                                           w.data(), &z, 1, isuppz.data());
    if (info != 0) throw numeric_error("dsyevr failed with info = " + std::to_string(info));
    w.resize(m);
    return w;
}

// Lanczos with full reorthogonalization; Ritz pairs accepted when beta_j |s_j| is below
// tolerance * max(1, |theta|).
inline Spectrum lanczos_lowest(const SymMatrix& H, int count, const EigenOptions& opt) {
    const std::size_t n = H.size();
    const int max_steps = opt.max_steps > 0 ? opt.max_steps : int(std::min<std::size_t>(n, std::max(400, 12 * count)));
    std::vector<std::vector<double>> V;
    std::vector<double> alpha, beta;
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> normal;
    std::vector<double> v(n), w(n);
    for (auto& x : v) x = normal(rng);
    double nv = cblas_dnrm2(int(n), v.data(), 1);
    cblas_dscal(int(n), 1.0 / nv, v.data(), 1);

    std::vector<double> theta, resid;
    for (int j = 0; j < max_steps; ++j) {
        V.push_back(v);
        cblas_dsymv(CblasColMajor, CblasUpper, int(n), 1.0, H.data(), int(n), v.data(), 1, 0.0, w.data(), 1);
        alpha.push_back(cblas_ddot(int(n), v.data(), 1, w.data(), 1));
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : V) cblas_daxpy(int(n), -cblas_ddot(int(n), q.data(), 1, w.data(), 1), q.data(), 1, w.data(), 1);
        const double b = cblas_dnrm2(int(n), w.data(), 1);

        const int m = j + 1;
        const bool exhausted = b < 1e-13 * std::max(1.0, std::fabs(alpha.back())) || m == int(n);
        if (m >= count && (m % 10 == 0 || exhausted || j + 1 == max_steps)) {
            std::vector<double> d(alpha), e(beta.begin(), beta.end()), s(std::size_t(m) * m);
            e.resize(std::max(m - 1, 1));
            const lapack_int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', m, d.data(), e.data(), s.data(), m);
            if (info != 0) throw numeric_error("dstev failed with info = " + std::to_string(info));
            theta.assign(d.begin(), d.begin() + count);
            resid.resize(count);
            bool ok = true;
            for (int i = 0; i < count; ++i) {
                resid[i] = exhausted ? 0.0 : b * std::fabs(s[std::size_t(i) * m + (m - 1)]);
                if (resid[i] > opt.tolerance * std::max(1.0, std::fabs(theta[i]))) ok = false;
            }
            if (ok) {
                Spectrum sp;
                sp.eigenvalues = theta;
                sp.residuals = resid;
                sp.solver = "lanczos(steps=" + std::to_string(m) + ")";
                return sp;
            }
        }
        if (exhausted) break;
        beta.push_back(b);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / b;
    }
    std::ostringstream os;
    os << "Lanczos did not converge in " << alpha.size() << " steps; residuals:";
    for (std::size_t i = 0; i < resid.size(); ++i) os << " [" << i << "] " << theta[i] << " +- " << resid[i];
    throw numeric_error(os.str());
}

}  // namespace detail

// Lowest `count` eigenvalues.
inline Spectrum eigen_spectrum(const SymMatrix& H, int count, const EigenOptions& opt = {}) {
    if (count < 1) throw usage_error("eigenvalue count must be >= 1");
    const std::size_t n = H.size();
    if (std::size_t(count) > n) throw usage_error("requested " + std::to_string(count) + " eigenvalues of a " +
                                                  std::to_string(n) + "-dimensional matrix");
    Spectrum sp;
    if (n > opt.dense_limit && count <= opt.lanczos_max_count) {
        sp = detail::lanczos_lowest(H, count, opt);
    } else {
        sp.eigenvalues = detail::dense_eigenvalues(H, 'I', 0, 0, 1, count);
        sp.solver = "dsyevr";
    }
    sp.basis_size = n;
    return sp;
}

// All eigenvalues below e_max (dense solver).
inline Spectrum eigen_spectrum_below(const SymMatrix& H, double e_max) {
    Spectrum sp;
    sp.eigenvalues = detail::dense_eigenvalues(H, 'V', -std::numeric_limits<double>::max(), e_max, 0, 0);
    sp.solver = "dsyevr";
    sp.basis_size = H.size();
    sp.complete_below = e_max;
    return sp;
}

inline Spectrum eigen_spectrum(const HamiltonianBlock& block, int count, const EigenOptions& opt = {}) {
    Spectrum sp = eigen_spectrum(block.H, count, opt);
    sp.basis = block.basis.describe();
    sp.g = block.g;
    sp.hbar = block.hbar;
    return sp;
}

// Per-level convergence estimate from the same levels in another basis.
inline void attach_convergence(Spectrum& s, const Spectrum& other) {
    s.convergence.assign(s.size(), 0.0);
    const std::size_t m = std::min(s.size(), other.size());
    for (std::size_t i = 0; i < m; ++i) s.convergence[i] = std::fabs(s.eigenvalues[i] - other.eigenvalues[i]);
    // Levels beyond the shorter list inherit the largest matched difference.
    const double worst = m ? *std::max_element(s.convergence.begin(), s.convergence.begin() + m) : 0.0;
    for (std::size_t i = m; i < s.size(); ++i) s.convergence[i] = worst;
}

// Spectrum of the x^2 y^2 Hamiltonian below e_max from the symmetry sectors; the mixed
// parity sector is entered twice.
inline Spectrum x2y2_spectrum_below(double g, double hbar, BasisSpec basis, double e_max) {
    Spectrum out;
    for (const auto& ws : exchange_symmetric_sectors()) {
        basis.sector = ws.sector;
        const HamiltonianBlock block = build_hamiltonian_2d(g, hbar, basis);
        const Spectrum part = eigen_spectrum_below(block.H, e_max);
        for (int r = 0; r < ws.multiplicity; ++r)
            out.eigenvalues.insert(out.eigenvalues.end(), part.eigenvalues.begin(), part.eigenvalues.end());
        out.basis_size += block.states.size();
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    basis.sector.reset();
    out.basis = basis.describe() + " (symmetry sectors)";
    out.solver = "dsyevr";
    out.complete_below = e_max;
    out.g = g;
    out.hbar = hbar;
    return out;
}

// Ground state over a coarse frequency scan omega = (g hbar)^{1/2} 2^{j/4}, j = -4..4.
inline double variational_omega(double g, double hbar, BasisSpec basis) {
    const double w0 = std::sqrt(g * hbar);
    double best = w0, best_e = std::numeric_limits<double>::infinity();
    for (int j = -4; j <= 4; ++j) {
        basis.omega = w0 * std::pow(2.0, j / 4.0);
        const double e = eigen_spectrum(build_hamiltonian_2d(g, hbar, basis).H, 1).ground();
        if (e < best_e) {
            best_e = e;
            best = basis.omega;
        }
    }
    return best;
}

}  // namespace ymwk
