#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ymwk/wk/momentum.hpp"

namespace ymwk {

struct ImnEntry {
    Rational coefficient;
    int m = 0;
    int n = 0;
    int g_power = 0;
    int t_power = 0;  // includes the 1/t from the two momentum Gaussians
    bool logarithmic = false;   // m == n
    bool subdominant = false;   // m - n < k/2
    int ell = 0;                // m - n = k/2 - 2 ell

    int difference() const { return m - n; }
    friend bool operator==(const ImnEntry&, const ImnEntry&) = default;
};

// int dGamma W_k e^{-tV} = 2 pi * sum_entries coefficient t^t_power g^g_power I_mn,
// with I_mn = 4 int_0^Q int_0^Q x^{2m} y^{2n} e^{-t g^2 x^2 y^2/2} dx dy.
struct ImnDecomposition {
    int k = 0;
    std::vector<ImnEntry> entries;

    std::vector<ImnEntry> leading() const {
        std::vector<ImnEntry> out;
        for (const auto& e : entries)
            if (!e.subdominant) out.push_back(e);
        return out;
    }
    std::vector<ImnEntry> diagonal() const {
        std::vector<ImnEntry> out;
        for (const auto& e : entries)
            if (e.logarithmic) out.push_back(e);
        return out;
    }
    int max_difference() const {
        int d = -1;
        for (const auto& e : entries) d = std::max(d, e.difference());
        return d;
    }
    const ImnEntry* find(int m, int n) const {
        for (const auto& e : entries)
            if (e.m == m && e.n == n) return &e;
        return nullptr;
    }
    friend bool operator==(const ImnDecomposition&, const ImnDecomposition&) = default;
};

inline ImnDecomposition imn_decompose(const MomentReduced& reduced, int k) {
    if (reduced.dims != 2) throw usage_error("I_mn decomposition needs the two-dimensional integrand");
    if (k < 0) throw usage_error("order must be nonnegative");
    const std::size_t xi = PhasePoly::index_of("x"), yi = PhasePoly::index_of("y"),
                      ti = PhasePoly::index_of("t"), gi = PhasePoly::index_of("g");
    using Key = std::tuple<int, int, int, int>;  // m, n, t_power, g_power
    std::map<Key, Rational> acc;
    for (const auto& [e, c] : reduced.integrand.terms()) {
        for (std::size_t s = 0; s < e.size(); ++s)
            if (s != xi && s != yi && s != ti && s != gi && e[s] != 0)
                throw usage_error("integrand still depends on " + std::string(PhaseSpaceAlphabet::symbols[s]));
        if (e[xi] % 2 || e[yi] % 2 || e[xi] < 0 || e[yi] < 0)
            throw usage_error("odd or negative power of x or y in reduced integrand");
        if (!c.is_real()) throw usage_error("reduced integrand has an imaginary coefficient");
        int a = e[xi] / 2, b = e[yi] / 2;
        acc[{std::max(a, b), std::min(a, b), e[ti] - 1, e[gi]}] += c.re();
    }
    ImnDecomposition out{k, {}};
    for (const auto& [key, c] : acc) {
        if (c == 0) continue;
        auto [m, n, tp, gp] = key;
        ImnEntry en{c, m, n, gp, tp, m == n, false, 0};
        int gap = k / 2 - (m - n);
        en.subdominant = gap > 0;
        en.ell = gap / 2;
        out.entries.push_back(en);
    }
    std::stable_sort(out.entries.begin(), out.entries.end(), [](const ImnEntry& a, const ImnEntry& b) {
        if (a.difference() != b.difference()) return a.difference() > b.difference();
        return a.n < b.n;
    });
    return out;
}

inline std::string to_csv(const ImnDecomposition& d) {
    std::ostringstream os;
    os << "coef_num,coef_den,m,n,g_pow,t_pow\n";
    for (const auto& e : d.entries)
        os << num(e.coefficient) << ',' << den(e.coefficient) << ',' << e.m << ',' << e.n << ',' << e.g_power
           << ',' << e.t_power << '\n';
    return os.str();
}

}  // namespace ymwk
