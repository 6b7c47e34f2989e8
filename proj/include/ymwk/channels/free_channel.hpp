#pragma once

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "ymwk/central/params.hpp"
#include "ymwk/central/square.hpp"
#include "ymwk/channels/zeta_integral.hpp"
#include "ymwk/quadrature.hpp"
#include "ymwk/wk/recursion.hpp"

namespace ymwk {

// One piece of the channel contribution in units of K:
//   factor * hbar^hbar_pow g^g_pow t^t_pow * int_{xi0}^inf integrand(xi) dxi.
struct ChannelPiece {
    HyperPoly integrand;
    Rational factor;
    int hbar_pow = 0;
    int g_pow = 0;
    int t_pow = 0;
    int x_power = 0;

    double prefactor(const ModelParams& p) const {
        return to_double(factor) * std::pow(p.hbar, hbar_pow) * std::pow(p.g, g_pow) * std::pow(p.t, t_pow);
    }
};

struct FreeChannelResult {
    HyperPoly leading_integrand;  // dimensionless, all four channels
    ZetaCombination constant;     // its integral over (0, inf)
    LaurentSeries small_xi;       // expansion of the leading integrand at xi -> 0
    Rational hgtq2_coefficient;   // coefficient of (hbar g t Q)^2 from the lower limit
    std::vector<ChannelPiece> discarded;
    double channel = 0.0;         // K units, leading pieces
    double discarded_value = 0.0; // K units, pieces suppressed by 1/(g^2 t x^2)
    double square = 0.0;          // K units, dominant square term at k = 2
    double combined = 0.0;        // channel + square
};

namespace detail {

// d^i/da^i d^j/db^j of h(xi sqrt(ab)) at a = b = 1, as sum_r c_r xi^r h^{(r)}(xi).
// State keys (P, Q, r) stand for a^{P/2} b^{Q/2} xi^r h^{(r)}(xi sqrt(ab)).
inline std::map<int, Rational> rescaled_derivative(int i, int j) {
    std::map<std::array<int, 3>, Rational> state{{{0, 0, 0}, Rational(1)}};
    auto step = [&](bool wrt_a) {
        std::map<std::array<int, 3>, Rational> next;
        for (const auto& [key, c] : state) {
            auto [P, Q, r] = key;
            int own = wrt_a ? P : Q;
            if (own != 0) {
                auto k2 = key;
                (wrt_a ? k2[0] : k2[1]) -= 2;
                next[k2] += c * Rational(own, 2);
            }
            // chain rule: xi * (1/2) a^{-1/2} b^{1/2} (or a <-> b) times h^{(r+1)}
            std::array<int, 3> k3{wrt_a ? P - 1 : P + 1, wrt_a ? Q + 1 : Q - 1, r + 1};
            next[k3] += c / 2;
        }
        state = std::move(next);
    };
    for (int s = 0; s < i; ++s) step(true);
    for (int s = 0; s < j; ++s) step(false);
    std::map<int, Rational> out;
    for (const auto& [key, c] : state) out[key[2]] += c;
    return out;
}

inline double piece_integral(const ChannelPiece& piece, double xi0) {
    auto f = [&](double xi) { return xi > 700.0 ? 0.0 : hyper_evaluate(piece.integrand, xi); };
    return integrate_to_infinity(f, xi0, {1e-12, 1e-10, 200000}).value;
}

}  // namespace detail

// Second-order channel term with free transverse motion. W_2 of the quartic potential
// is reduced over p_x; y^{2i} p_y^{2j} become derivatives of the rescaled oscillator trace
// Tr exp(-t(b p^2 + a g^2 x^2 y^2)/2) = 1/(2 sinh(xi sqrt(ab))) via
//   p_y^2 -> -(2/t) d/db,  y^2 -> -(2/(t g^2 x^2)) d/da.
// The piece with the highest power of x is kept; the rest is reported as discarded.
inline FreeChannelResult z2_free_channel(const ModelParams& p) {
    if (p.xi0() >= 1.0) throw regime_error("free-channel expansion needs xi0 = hbar g t Q / 2 < 1, got " +
                                           std::to_string(p.xi0()));
    const std::size_t X = 0, Y = 1, PX = 2, PY = 3, T = 4, A = 5, G = 6;
    const PhasePoly W2 = wk_sequence(PotentialSpec::quartic_xy(), 2).orders[2];

    // (x power, t power, g power) -> integrand in xi, before the x -> xi conversion factor
    std::map<std::array<int, 3>, HyperPoly> groups;
    for (const auto& [e, c] : W2.terms()) {
        if (e[PX] % 2) continue;
        if (e[Y] % 2 || e[PY] % 2 || e[A]) throw error("unexpected odd transverse power in W_2");
        if (!c.is_real()) throw error("imaginary coefficient survived the p_x reduction");
        const int i = e[Y] / 2, j = e[PY] / 2;
        Rational coef = c.re() * Rational(double_factorial(e[PX] - 1));
        coef *= rational_pow(Rational(-2), i + j);
        const std::array<int, 3> key{e[X] - 2 * i, e[T] - e[PX] / 2 - i - j, e[G] - 2 * i};
        HyperPoly op;
        for (const auto& [r, dr] : detail::rescaled_derivative(i, j))
            op += HyperPoly::symbol("xi", r) * csch_derivative(r) * (dr / 2);
        groups[key] += op * coef;
    }

    FreeChannelResult out;
    int top = groups.empty() ? 0 : groups.begin()->first[0];
    for (const auto& [key, op] : groups) top = std::max(top, key[0]);
    int leading_pieces = 0;
    for (const auto& [key, op] : groups) {
        if (op.is_zero()) continue;
        auto [e, tau, gam] = key;
        // int_Q^inf dx x^e ... with x = 2 xi/(hbar g t), per channel, divided by K, times 4 channels.
        ChannelPiece piece{op * HyperPoly::symbol("xi", e), Rational(4) * rational_pow(Rational(2), e + 1),
                           2 - e, gam - e, tau - e, e};
        if (e == top) {
            if (piece.hbar_pow || piece.g_pow || piece.t_pow)
                throw error("leading free-channel piece is not dimensionless");
            out.leading_integrand += piece.integrand * piece.factor;
            ++leading_pieces;
        } else {
            out.discarded.push_back(piece);
        }
    }
    if (leading_pieces != 1) throw error("free-channel assembly found multiple leading groups");

    out.constant = integrate_0_inf(out.leading_integrand);
    out.small_xi = hyper_laurent(out.leading_integrand, 7);
    if (out.small_xi.min_order() < 0) throw error("leading channel integrand is singular at xi = 0");
    // -int_0^{xi0} c_1 xi dxi = -c_1 xi0^2 / 2 and xi0 = (hbar g t Q)/2.
    out.hgtq2_coefficient = -out.small_xi.coefficient(1) / 8;

    const double xi0 = p.xi0();
    auto lead = [&](double xi) { return hyper_evaluate(out.leading_integrand, xi); };
    const double lower = integrate_adaptive(lead, 0.0, xi0, {1e-15, 1e-12, 100000}).value;
    out.channel = static_cast<double>(out.constant.evaluate()) - lower;
    for (const auto& piece : out.discarded) out.discarded_value += piece.prefactor(p) * detail::piece_integral(piece, xi0);
    out.square = to_double(zk_square(2, p).coefficient) * std::pow(p.hgtQ(), 2);
    out.combined = out.channel + out.square;
    return out;
}

}  // namespace ymwk
