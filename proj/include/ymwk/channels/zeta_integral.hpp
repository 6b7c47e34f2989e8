#pragma once

#include <map>
#include <string>
#include <vector>

#include "ymwk/channels/hyperbolic.hpp"
#include "ymwk/constants.hpp"

namespace ymwk {

// rational + sum_s c_s zeta(s)
struct ZetaCombination {
    Rational rational;
    std::map<int, Rational> zeta;

    ZetaCombination& operator+=(const ZetaCombination& o) {
        rational += o.rational;
        for (const auto& [s, c] : o.zeta) zeta[s] += c;
        prune();
        return *this;
    }
    ZetaCombination scaled(const Rational& f) const {
        ZetaCombination out = *this;
        out.rational *= f;
        for (auto& [s, c] : out.zeta) c *= f;
        out.prune();
        return out;
    }
    Rational coefficient(int s) const {
        auto it = zeta.find(s);
        return it == zeta.end() ? Rational(0) : it->second;
    }
    template <class T = HighFloat>
    T evaluate() const {
        T v = to_float<T>(rational);
        for (const auto& [s, c] : zeta) v += to_float<T>(c) * ymwk::zeta<T>(s);
        return v;
    }
    std::string str() const {
        std::string out = (zeta.empty() || rational != 0) ? to_string(rational) : std::string();
        for (const auto& [s, c] : zeta)
            out += (out.empty() ? "" : " + ") + ("(" + to_string(c) + ")*zeta(" + std::to_string(s) + ")");
        return out;
    }

private:
    void prune() {
        for (auto it = zeta.begin(); it != zeta.end();) it = it->second == 0 ? zeta.erase(it) : std::next(it);
    }
};

namespace detail {

using RPoly = std::vector<Rational>;  // ascending coefficients

inline RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
    RPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline void rpoly_add(RPoly& a, const RPoly& b, const Rational& s) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
}

}  // namespace detail

// Exact int_0^inf xi^n csch^a(xi) coth^b(xi) dxi for a >= 1, n >= a + b, via
// csch^a coth^b = 2^a e^{-a xi} (1+q)^b (1-q)^{-(a+b)}, q = e^{-2 xi}.
inline ZetaCombination integrate_monomial(int n, int a, int b) {
    using detail::RPoly;
    if (a < 1) throw usage_error("integrand without a csch factor is not integrable on (0, inf)");
    if (n < a + b) throw usage_error("integrand xi^" + std::to_string(n) + " csch^" + std::to_string(a) + " coth^" +
                                     std::to_string(b) + " diverges at 0");
    const int d = a + b - 1;
    // j = (m - a)/2 as a polynomial in m.
    const RPoly j_of_m{Rational(-a, 2), Rational(1, 2)};
    RPoly P{Rational(0)};
    for (int i = 0; i <= b; ++i) {
        RPoly term{Rational(1)};
        for (int s = 1; s <= d; ++s) {
            RPoly f = j_of_m;
            f[0] += Rational(s - i);
            term = detail::rpoly_mul(term, f);
        }
        detail::rpoly_add(P, term, Rational(binomial(b, i)) / Rational(factorial(d)));
    }
    ZetaCombination out;
    const Rational scale = Rational(pow2(a)) * Rational(factorial(n));
    for (std::size_t p = 0; p < P.size(); ++p) {
        if (P[p] == 0) continue;
        const int s = n + 1 - static_cast<int>(p);
        if (s < 2) throw error("divergent lattice sum in monomial integral");
        // sum over m in {a, a+2, ...} of m^{-s}
        ZetaCombination lattice;
        if (a % 2) {
            lattice.zeta[s] = Rational(1) - Rational(1, pow2(s));
            for (int m = 1; m < a; m += 2) lattice.rational -= Rational(1) / rational_pow(Rational(m), s);
        } else {
            lattice.zeta[s] = Rational(1, pow2(s));
            for (int m = 2; m < a; m += 2) lattice.rational -= Rational(1) / rational_pow(Rational(m), s);
        }
        out += lattice.scaled(scale * P[p]);
    }
    return out;
}

inline ZetaCombination integrate_0_inf(const HyperPoly& p) {
    ZetaCombination out;
    for (const auto& [e, c] : p.terms())
        out += integrate_monomial(e[hyper::XI], e[hyper::CSCH], e[hyper::COTH]).scaled(c);
    return out;
}

}  // namespace ymwk
