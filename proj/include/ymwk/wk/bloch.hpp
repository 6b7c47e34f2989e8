#pragma once

#include <string>
#include <vector>

#include "ymwk/wk/recursion.hpp"

namespace ymwk {

struct BlochOrder {
    int k = 0;
    bool residual_zero = false;
    bool initial_condition_ok = false;
    std::size_t residual_terms = 0;

    friend bool operator==(const BlochOrder&, const BlochOrder&) = default;
};

struct BlochReport {
    std::string potential;
    std::vector<BlochOrder> orders;

    bool all_ok() const {
        for (const auto& o : orders)
            if (!o.residual_zero || !o.initial_condition_ok) return false;
        return true;
    }
    int first_failure() const {
        for (const auto& o : orders)
            if (!o.residual_zero || !o.initial_condition_ok) return o.k;
        return -1;
    }
    friend bool operator==(const BlochReport&, const BlochReport&) = default;
};

// Independent re-check in covariant form with D = grad - t grad V:
//   dW_k/dt = 1/2 [D.(D W_{k-2}) + 2i p . D W_{k-1}],  W_k(t=0) = 0 for k >= 1, W_0 = 1.
inline BlochReport verify_bloch(const WkSequence& seq) {
    const auto& pot = seq.potential;
    const auto xs = pot.positions();
    const auto ps = pot.momenta();
    const std::size_t ti = PhasePoly::index_of("t");
    const PhasePoly t = PhasePoly::symbol("t");

    auto D = [&](const PhasePoly& f, std::size_t j) { return f.diff(j) - t * pot.V.diff(j) * f; };

    BlochReport report{pot.name, {}};
    for (int k = 0; k <= seq.kmax(); ++k) {
        const PhasePoly& w = seq.orders[k];
        BlochOrder o{k, false, false, 0};
        if (k == 0) {
            o.residual_zero = true;
            o.initial_condition_ok = (w == PhasePoly(1));
        } else {
            PhasePoly rhs;
            for (std::size_t a = 0; a < xs.size(); ++a) {
                if (k >= 2) rhs += D(D(seq.orders[k - 2], xs[a]), xs[a]);
                PhasePoly p = PhasePoly::symbol(PhaseSpaceAlphabet::symbols[ps[a]]);
                rhs += PhasePoly(GaussRational(0, 2)) * p * D(seq.orders[k - 1], xs[a]);
            }
            PhasePoly residual = w.diff(ti) - rhs * GaussRational(Rational(1, 2));
            o.residual_terms = residual.size();
            o.residual_zero = residual.is_zero();
            o.initial_condition_ok = w.slice(ti, 0).is_zero();
            for (const auto& [e, c] : w.terms())
                if (e[ti] < 0) o.initial_condition_ok = false;
        }
        report.orders.push_back(o);
    }
    return report;
}

}  // namespace ymwk
