#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ymwk/spectral/basis.hpp"

namespace ymwk {

// Dense symmetric matrix, column-major (and row-major, being symmetric).
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[j * n_ + i]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[j * n_ + i]; }
    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    double max_asymmetry() const {
        double m = 0;
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = 0; i < j; ++i) m = std::max(m, std::fabs((*this)(i, j) - (*this)(j, i)));
        return m;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

// One-dimensional ingredients: kinetic matrix and x^2 matrix (banded) on an index set.
struct Axis1D {
    std::vector<double> coordinate;          // grid points (grid) or quanta n (oscillator)
    std::vector<std::vector<double>> kinetic;  // p^2/2
    std::vector<std::vector<std::pair<int, double>>> x2;  // nonzero x^2 entries per row
};

namespace detail {

// Sinc-DVR kinetic energy for spacing h: (hbar^2/2h^2) {pi^2/3, d = 0; 2(-1)^d/d^2}.
inline double sinc_kinetic(long d, double hbar, double h) {
    const double s = hbar * hbar / (2.0 * h * h);
    if (d == 0) return s * M_PI * M_PI / 3.0;
    return s * 2.0 * ((d % 2) ? -1.0 : 1.0) / (double(d) * double(d));
}

inline Axis1D oscillator_axis(int size, double omega, double hbar, const Parity* parity) {
    Axis1D ax;
    std::vector<int> ns;
    for (int n = 0; n < size; ++n)
        if (!parity || (n % 2 == 0) == (*parity == Parity::even)) ns.push_back(n);
    const std::size_t m = ns.size();
    ax.kinetic.assign(m, std::vector<double>(m, 0.0));
    ax.x2.resize(m);
    const double xs = hbar / (2.0 * omega), ps = hbar * omega / 2.0;
    for (std::size_t a = 0; a < m; ++a) {
        ax.coordinate.push_back(ns[a]);
        for (std::size_t b = 0; b < m; ++b) {
            const int n = ns[a], k = ns[b];
            double x2 = 0, p2 = 0;
            if (n == k) {
                x2 = xs * (2 * n + 1);
                p2 = ps * (2 * n + 1);
            } else if (std::abs(n - k) == 2) {
                const int lo = std::min(n, k);
                const double r = std::sqrt(double(lo + 1) * double(lo + 2));
                x2 = xs * r;
                p2 = -ps * r;
            }
            ax.kinetic[a][b] = p2 / 2.0;
            if (x2 != 0.0) ax.x2[a].push_back({int(b), x2});
        }
    }
    return ax;
}

// Half-axis points (i + 1/2) h with parity-adapted kinetic energy, or the full line when
// no parity is requested.
inline Axis1D grid_axis(int size, double h, double hbar, const Parity* parity) {
    Axis1D ax;
    std::vector<long> idx;
    if (parity)
        for (long i = 0; i < size; ++i) idx.push_back(i);
    else
        for (long i = -size; i < size; ++i) idx.push_back(i);
    const std::size_t m = idx.size();
    ax.kinetic.assign(m, std::vector<double>(m, 0.0));
    ax.x2.resize(m);
    const double sign = parity && *parity == Parity::odd ? -1.0 : 1.0;
    for (std::size_t a = 0; a < m; ++a) {
        const double x = (idx[a] + 0.5) * h;
        ax.coordinate.push_back(x);
        ax.x2[a].push_back({int(a), x * x});
        for (std::size_t b = 0; b < m; ++b) {
            double v = sinc_kinetic(idx[a] - idx[b], hbar, h);
            if (parity) v += sign * sinc_kinetic(idx[a] + idx[b] + 1, hbar, h);
            ax.kinetic[a][b] = v;
        }
    }
    return ax;
}

}  // namespace detail

// Matrix of -(hbar^2/2) Laplacian + (g^2/2) x^2 y^2 on a basis, with the list of product
// states (index on the x axis, index on the y axis) labelling the rows.
struct HamiltonianBlock {
    BasisSpec basis;
    double g = 1.0;
    double hbar = 1.0;
    std::vector<std::pair<int, int>> states;
    SymMatrix H;
};

inline HamiltonianBlock build_hamiltonian_2d(double g, double hbar, const BasisSpec& basis) {
    basis.validate();
    if (!(g > 0) || !(hbar > 0)) throw usage_error("g and hbar must be positive");
    const Parity* px = basis.sector ? &basis.sector->x : nullptr;
    const Parity* py = basis.sector ? &basis.sector->y : nullptr;
    const Exchange ex = basis.sector ? basis.sector->exchange : Exchange::none;

    auto make_axis = [&](const Parity* p) {
        return basis.kind == BasisKind::grid ? detail::grid_axis(basis.size, basis.spacing, hbar, p)
                                             : detail::oscillator_axis(basis.size, basis.omega, hbar, p);
    };
    const Axis1D ax = make_axis(px), ay = make_axis(py);
    const int nx = int(ax.coordinate.size()), ny = int(ay.coordinate.size());
    const bool grid = basis.kind == BasisKind::grid;

    auto potential = [&](int a, int b) {
        const double x = ax.coordinate[a], y = ay.coordinate[b];
        return 0.5 * g * g * x * x * y * y;
    };
    auto kept = [&](int a, int b) {
        if (ex == Exchange::symmetric && a < b) return false;
        if (ex == Exchange::antisymmetric && a <= b) return false;
        if (grid && basis.mask) {
            const double x = std::fabs(ax.coordinate[a]), y = std::fabs(ay.coordinate[b]);
            const double widen = 0.5 * basis.mask->kappa * basis.mask->kappa * hbar * g * std::max(x, y);
            if (potential(a, b) > basis.mask->v_cut + widen) return false;
        }
        return true;
    };

    HamiltonianBlock out;
    out.basis = basis;
    out.g = g;
    out.hbar = hbar;
    std::vector<int> index(std::size_t(nx) * ny, -1);
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b)
            if (kept(a, b)) {
                index[std::size_t(a) * ny + b] = int(out.states.size());
                out.states.push_back({a, b});
            }
    const std::size_t n = out.states.size();
    if (n == 0) throw usage_error("basis " + basis.describe() + " has no states");
    if (n * n * sizeof(double) > basis.memory_budget)
        throw usage_error("basis " + basis.describe() + " needs a " + std::to_string(n) + "x" + std::to_string(n) +
                          " matrix, beyond the memory budget of " + std::to_string(basis.memory_budget) + " bytes");
    out.H = SymMatrix(n);

    // Product-state element h(ab, kl) lands on state canon(k, l). With exchange symmetry
    // sigma = +-1 the symmetrized element is [h(ab,kl) + sigma h(ab,lk)] / sqrt((1+d_ab)(1+d_kl)).
    const double sigma = ex == Exchange::antisymmetric ? -1.0 : 1.0;
    std::vector<double> row(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        const auto [a, b] = out.states[s];
        std::fill(row.begin(), row.end(), 0.0);
        auto deposit = [&](int k, int l, double h) {
            if (h == 0.0) return;
            if (ex == Exchange::none) {
                const int j = index[std::size_t(k) * ny + l];
                if (j >= 0) row[j] += h;
                return;
            }
            const int hi = std::max(k, l), lo = std::min(k, l);
            const int j = index[std::size_t(hi) * ny + lo];
            if (j < 0) return;
            if (k == l)
                row[j] += (1.0 + sigma) * h;
            else
                row[j] += (k > l ? 1.0 : sigma) * h;
        };
        for (int k = 0; k < nx; ++k) deposit(k, b, ax.kinetic[a][k]);
        for (int l = 0; l < ny; ++l) deposit(a, l, ay.kinetic[b][l]);
        if (grid) {
            deposit(a, b, potential(a, b));
        } else {
            for (const auto& [k, xk] : ax.x2[a])
                for (const auto& [l, yl] : ay.x2[b]) deposit(k, l, 0.5 * g * g * xk * yl);
        }
        const double da = (ex != Exchange::none && a == b) ? 2.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] == 0.0) continue;
            const auto [k, l] = out.states[j];
            const double dk = (ex != Exchange::none && k == l) ? 2.0 : 1.0;
            out.H(s, j) = row[j] / std::sqrt(da * dk);
        }
    }
    return out;
}

}  // namespace ymwk
