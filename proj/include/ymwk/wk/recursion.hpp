#pragma once

#include <string>
#include <vector>

#include "ymwk/wk/potential.hpp"

namespace ymwk {

struct WkSequence {
    PotentialSpec potential;
    std::vector<PhasePoly> orders;  // W_0 .. W_kmax
    std::string provenance = "wigner-recursion";

    int kmax() const { return static_cast<int>(orders.size()) - 1; }
    const PhasePoly& operator[](int k) const { return orders.at(k); }
};

// Wigner-form recursion
//   dW_k/dt = 1/2 [lap - t lap V + t^2 (grad V)^2 - 2t grad V . grad] W_{k-2}
//             + i p . [grad - t grad V] W_{k-1},
// integrated in t with zero constant, W_0 = 1.
inline WkSequence wk_sequence(const PotentialSpec& pot, int kmax) {
    if (kmax < 0) throw usage_error("kmax must be nonnegative");
    const auto xs = pot.positions();
    const auto ps = pot.momenta();
    const PhasePoly t = PhasePoly::symbol("t");
    const PhasePoly t2 = t * t;
    const PhasePoly I = PhasePoly(GaussRational::i());
    const PhasePoly half = PhasePoly(GaussRational(Rational(1, 2)));

    std::vector<PhasePoly> gradV;
    PhasePoly lapV, gradV2;
    for (auto j : xs) {
        gradV.push_back(pot.V.diff(j));
        lapV += pot.V.diff(j).diff(j);
        gradV2 += gradV.back() * gradV.back();
    }
    // Operators applied to W_{k-2}: multiplicative part and per-direction first-derivative weights.
    const PhasePoly mult2 = gradV2 * t2 - lapV * t;

    WkSequence seq{pot, {PhasePoly(1)}};
    seq.orders.reserve(kmax + 1);
    for (int k = 1; k <= kmax; ++k) {
        PhasePoly rhs;
        if (k >= 2) {
            const PhasePoly& w = seq.orders[k - 2];
            PhasePoly acc = mult2 * w;
            for (std::size_t a = 0; a < xs.size(); ++a) {
                PhasePoly dw = w.diff(xs[a]);
                acc += dw.diff(xs[a]);
                acc -= PhasePoly(2) * t * gradV[a] * dw;
            }
            rhs += half * acc;
        }
        const PhasePoly& w1 = seq.orders[k - 1];
        PhasePoly acc;
        for (std::size_t a = 0; a < xs.size(); ++a)
            acc += PhasePoly::symbol(PhaseSpaceAlphabet::symbols[ps[a]]) * (w1.diff(xs[a]) - t * gradV[a] * w1);
        rhs += I * acc;
        seq.orders.push_back(poly_int_t(rhs));
    }
    return seq;
}

}  // namespace ymwk
