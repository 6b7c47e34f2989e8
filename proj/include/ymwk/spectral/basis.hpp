#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ymwk/error.hpp"

namespace ymwk {

enum class BasisKind { oscillator_product, grid };
enum class Parity { even, odd };
enum class Exchange { none, symmetric, antisymmetric };

inline const char* to_string(BasisKind k) { return k == BasisKind::grid ? "grid" : "oscillator_product"; }
inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }
inline const char* to_string(Exchange e) {
    switch (e) {
        case Exchange::symmetric: return "symmetric";
        case Exchange::antisymmetric: return "antisymmetric";
        default: return "none";
    }
}

struct Sector {
    Parity x = Parity::even;
    Parity y = Parity::even;
    Exchange exchange = Exchange::none;

    bool operator==(const Sector&) const = default;
    std::string str() const {
        return std::string("(") + to_string(x) + "," + to_string(y) + "," + to_string(exchange) + ")";
    }
};

// Sectors of an x <-> y symmetric Hamiltonian with even potential in x and y. The mixed
// parity block (even, odd) stands for (odd, even) as well, hence multiplicity 2.
struct WeightedSector {
    Sector sector;
    int multiplicity = 1;
};

inline std::vector<WeightedSector> exchange_symmetric_sectors() {
    using P = Parity;
    using X = Exchange;
    return {{{P::even, P::even, X::symmetric}, 1},
            {{P::even, P::even, X::antisymmetric}, 1},
            {{P::odd, P::odd, X::symmetric}, 1},
            {{P::odd, P::odd, X::antisymmetric}, 1},
            {{P::even, P::odd, X::none}, 2}};
}

// Grid points are kept where V <= v_cut + kappa^2 hbar g max(|x|,|y|) / 2: the classically
// allowed region widened by kappa transverse oscillator widths along the channels.
struct GridMask {
    double v_cut = 100.0;
    double kappa = 5.0;
};

struct BasisSpec {
    BasisKind kind = BasisKind::oscillator_product;
    int size = 30;          // oscillator: quanta 0..size-1; grid: points on the half axis
    double omega = 1.0;     // oscillator frequency
    double spacing = 0.2;   // grid spacing, points at (i + 1/2) spacing
    std::optional<GridMask> mask;
    std::optional<Sector> sector;  // unset: full product basis
    std::size_t memory_budget = std::size_t(3) << 30;  // bytes for the dense matrix

    void validate() const {
        if (size < 1) throw usage_error("basis size must be >= 1");
        if (kind == BasisKind::oscillator_product && !(omega > 0)) throw usage_error("oscillator frequency must be positive");
        if (kind == BasisKind::grid && !(spacing > 0)) throw usage_error("grid spacing must be positive");
        if (sector && sector->exchange != Exchange::none && sector->x != sector->y)
            throw usage_error("exchange symmetry needs equal parities in x and y");
    }

    double extent() const { return size * spacing; }

    std::string describe() const {
        std::ostringstream os;
        os << to_string(kind) << " size=" << size;
        if (kind == BasisKind::oscillator_product)
            os << " omega=" << omega;
        else
            os << " spacing=" << spacing;
        if (mask) os << " v_cut=" << mask->v_cut << " kappa=" << mask->kappa;
        if (sector) os << " sector=" << sector->str();
        return os.str();
    }
};

}  // namespace ymwk
