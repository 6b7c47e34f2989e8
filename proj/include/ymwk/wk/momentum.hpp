#pragma once

#include "ymwk/wk/potential.hpp"

namespace ymwk {

// Result of the Gaussian momentum integral against exp(-t p^2 / 2).
// The factor (2 pi / t)^{dims/2} is kept out of the polynomial.
struct MomentReduced {
    PhasePoly integrand;
    int dims = 2;
};

// p^{2k} -> (2k-1)!! t^{-k} per momentum symbol; odd moments vanish.
inline MomentReduced reduce_momentum(const PhasePoly& W, int dims) {
    if (dims != 1 && dims != 2) throw usage_error("momentum reduction needs dims 1 or 2");
    const std::size_t px = PhasePoly::index_of("px"), py = PhasePoly::index_of("py"),
                      ti = PhasePoly::index_of("t");
    MomentReduced out{{}, dims};
    for (const auto& [e, c] : W.terms()) {
        if (dims == 1 && e[py] != 0) throw usage_error("py present in a one-dimensional reduction");
        if (e[px] < 0 || e[py] < 0) throw usage_error("negative momentum power");
        if (e[px] % 2 || e[py] % 2) continue;
        PhasePoly::Exponents r = e;
        r[px] = r[py] = 0;
        r[ti] -= (e[px] + e[py]) / 2;
        Rational moment = Rational(double_factorial(e[px] - 1) * double_factorial(e[py] - 1));
        out.integrand.add_term(r, c * GaussRational(moment));
    }
    return out;
}

}  // namespace ymwk
