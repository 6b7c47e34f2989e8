#pragma once

#include <string>
#include <vector>

#include "ymwk/exactalg/multipoly.hpp"

namespace ymwk {

enum class PotentialTag { quartic_xy, linear_alpha, custom };

struct PotentialSpec {
    int dimension = 2;
    PhasePoly V;
    PotentialTag tag = PotentialTag::custom;
    std::string name;

    std::vector<std::size_t> positions() const {
        if (dimension == 1) return {PhasePoly::index_of("x")};
        return {PhasePoly::index_of("x"), PhasePoly::index_of("y")};
    }
    std::vector<std::size_t> momenta() const {
        if (dimension == 1) return {PhasePoly::index_of("px")};
        return {PhasePoly::index_of("px"), PhasePoly::index_of("py")};
    }

    static PotentialSpec custom(PhasePoly V, int dimension, std::string name = "custom") {
        if (dimension != 1 && dimension != 2) throw usage_error("potential dimension must be 1 or 2");
        static const std::size_t px = PhasePoly::index_of("px"), py = PhasePoly::index_of("py"),
                                 t = PhasePoly::index_of("t"), y = PhasePoly::index_of("y");
        for (const auto& [e, c] : V.terms()) {
            for (int p : e)
                if (p < 0) throw usage_error("potential is not polynomial (negative exponent)");
            if (e[px] || e[py] || e[t]) throw usage_error("potential may not depend on momenta or t");
            if (dimension == 1 && e[y]) throw usage_error("one-dimensional potential depends on y");
        }
        return {dimension, std::move(V), PotentialTag::custom, std::move(name)};
    }

    // V = (g^2/2) x^2 y^2
    static PotentialSpec quartic_xy() {
        PhasePoly V = PhasePoly::symbol("g", 2) * PhasePoly::symbol("x", 2) * PhasePoly::symbol("y", 2) *
                      GaussRational(Rational(1, 2));
        PotentialSpec s = custom(std::move(V), 2, "quartic-xy");
        s.tag = PotentialTag::quartic_xy;
        return s;
    }

    // V = alpha x, alpha = (n + 1/2) hbar g for the n-th transverse mode
    static PotentialSpec linear_alpha() {
        PotentialSpec s = custom(PhasePoly::symbol("alpha") * PhasePoly::symbol("x"), 1, "linear");
        s.tag = PotentialTag::linear_alpha;
        return s;
    }

    static PotentialSpec by_name(const std::string& name) {
        if (name == "quartic-xy") return quartic_xy();
        if (name == "linear") return linear_alpha();
        throw usage_error("unknown potential '" + name + "' (expected quartic-xy or linear)");
    }
};

}  // namespace ymwk
