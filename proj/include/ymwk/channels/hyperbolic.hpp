#pragma once

#include <cmath>
#include <limits>
#include <map>

#include "ymwk/central/params.hpp"
#include "ymwk/exactalg/bernoulli.hpp"
#include "ymwk/exactalg/multipoly.hpp"

namespace ymwk {

// Tr exp(-t H_y) for the transverse oscillator, xi = hbar g t x / 2.
inline double oscillator_trace(double xi) {
    if (!(xi > 0)) throw usage_error("oscillator trace needs xi > 0");
    return 0.5 / std::sinh(xi);
}

// Truncated Laurent series sum_j c_j z^j, exact for j <= max_order.
struct LaurentSeries {
    std::map<int, Rational> coeffs;
    int max_order = 0;

    Rational coefficient(int j) const {
        auto it = coeffs.find(j);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    int min_order() const { return coeffs.empty() ? max_order : coeffs.begin()->first; }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries out;
        out.max_order = std::min(a.max_order + b.min_order(), b.max_order + a.min_order());
        for (const auto& [ja, ca] : a.coeffs)
            for (const auto& [jb, cb] : b.coeffs)
                if (ja + jb <= out.max_order) out.coeffs[ja + jb] += ca * cb;
        for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
            it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
        return out;
    }
    LaurentSeries& operator+=(const LaurentSeries& o) {
        max_order = std::min(max_order, o.max_order);
        for (const auto& [j, c] : o.coeffs) coeffs[j] += c;
        for (auto it = coeffs.begin(); it != coeffs.end();)
            it = (it->second == 0 || it->first > max_order) ? coeffs.erase(it) : std::next(it);
        return *this;
    }
    LaurentSeries scaled(const Rational& s) const {
        LaurentSeries out = *this;
        for (auto& [j, c] : out.coeffs) c *= s;
        if (s == 0) out.coeffs.clear();
        return out;
    }
    LaurentSeries shifted(int power) const {
        LaurentSeries out;
        out.max_order = max_order + power;
        for (const auto& [j, c] : coeffs) out.coeffs[j + power] = c;
        return out;
    }
    LaurentSeries derivative() const {
        LaurentSeries out;
        out.max_order = max_order - 1;
        for (const auto& [j, c] : coeffs)
            if (j != 0) out.coeffs[j - 1] = c * j;
        return out;
    }

    template <class T>
    T evaluate(T z) const {
        T s = 0;
        for (const auto& [j, c] : coeffs) s += T(to_double(c)) * std::pow(z, j);
        return s;
    }
};

// 1/sinh z = 1/z - 2 sum_{n=1}^{order} (2^{2n-1}-1) B_{2n} z^{2n-1} / (2n)!
inline LaurentSeries csch_series(int order) {
    if (order < 1) throw usage_error("csch series order must be >= 1");
    LaurentSeries s;
    s.max_order = 2 * order;
    s.coeffs[-1] = 1;
    for (int n = 1; n <= order; ++n)
        s.coeffs[2 * n - 1] = Rational(-2) * Rational(pow2(2 * n - 1) - 1) * bernoulli(2 * n) / Rational(factorial(2 * n));
    return s;
}

// coth z = sum_{n=0}^{order} 2^{2n} B_{2n} z^{2n-1} / (2n)!
inline LaurentSeries coth_series(int order) {
    if (order < 0) throw usage_error("coth series order must be >= 0");
    LaurentSeries s;
    s.max_order = 2 * order;
    for (int n = 0; n <= order; ++n)
        s.coeffs[2 * n - 1] = Rational(pow2(2 * n)) * bernoulli(2 * n) / Rational(factorial(2 * n));
    return s;
}

// ln coth(u/2) = -ln(u/2) + sum_{k>=1} (2^{2k-1}-1) B_{2k} u^{2k} / (k (2k)!), |u| < pi.
struct LogCothSeries {
    Rational log_coefficient = -1;       // multiplies ln(u/2)
    std::map<int, Rational> powers;      // u^{2k} coefficients

    double evaluate(double u) const {
        if (!(u > 0)) throw usage_error("ln coth series needs u > 0");
        if (u >= M_PI) throw regime_error("ln coth(u/2) series diverges for u >= pi (u = " + std::to_string(u) + ")");
        double s = to_double(log_coefficient) * std::log(u / 2.0);
        for (const auto& [p, c] : powers) s += to_double(c) * std::pow(u, p);
        return s;
    }
};

inline LogCothSeries log_coth_series(int order) {
    if (order < 1) throw usage_error("ln coth series order must be >= 1");
    LogCothSeries s;
    for (int k = 1; k <= order; ++k)
        s.powers[2 * k] = Rational(pow2(2 * k - 1) - 1) * bernoulli(2 * k) / (Rational(k) * Rational(factorial(2 * k)));
    return s;
}

// Polynomials in (xi, coth xi, csch xi) with rational coefficients.
struct HyperbolicAlphabet {
    static constexpr std::array<std::string_view, 3> symbols{"xi", "coth", "csch"};
};
using HyperPoly = MultiPoly<HyperbolicAlphabet, Rational>;

namespace hyper {
inline constexpr std::size_t XI = 0, COTH = 1, CSCH = 2;
}

// d/dxi with coth' = -csch^2 and csch' = -csch coth.
inline HyperPoly hyper_diff(const HyperPoly& p) {
    const HyperPoly csch = HyperPoly::symbol("csch"), coth = HyperPoly::symbol("coth");
    return p.diff(hyper::XI) - p.diff(hyper::COTH) * csch * csch - p.diff(hyper::CSCH) * csch * coth;
}

inline HyperPoly csch_derivative(int order) {
    if (order < 0) throw usage_error("derivative order must be nonnegative");
    HyperPoly p = HyperPoly::symbol("csch");
    for (int r = 0; r < order; ++r) p = hyper_diff(p);
    return p;
}

template <class T>
T hyper_evaluate(const HyperPoly& p, T xi) {
    using std::cosh;
    using std::pow;
    using std::sinh;
    const T cs = T(1) / sinh(xi), ct = cosh(xi) / sinh(xi);
    T s = 0;
    for (const auto& [e, c] : p.terms())
        s += T(to_double(c)) * pow(xi, e[hyper::XI]) * pow(ct, e[hyper::COTH]) * pow(cs, e[hyper::CSCH]);
    return s;
}

// Small-xi Laurent expansion of a hyperbolic polynomial, exact through `order`.
inline LaurentSeries hyper_laurent(const HyperPoly& p, int order) {
    LaurentSeries total;
    total.max_order = order;
    for (const auto& [e, c] : p.terms()) {
        // Every 1/z-led factor costs one order, so expand each factor deeper.
        int depth = order + e[hyper::COTH] + e[hyper::CSCH] + 2;
        LaurentSeries cs = csch_series(depth / 2 + 1), ct = coth_series(depth / 2 + 1);
        LaurentSeries term;
        term.max_order = depth + 4;
        term.coeffs[0] = 1;
        for (int j = 0; j < e[hyper::COTH]; ++j) term = term * ct;
        for (int j = 0; j < e[hyper::CSCH]; ++j) term = term * cs;
        total += term.shifted(e[hyper::XI]).scaled(c);
    }
    if (total.max_order < order) throw error("Laurent expansion lost precision");
    return total;
}

// (2n-1)-th (or any r-th) derivative of csch via the Bernoulli series, |xi| < pi.
inline double csch_derivative_series(int order, double xi, int terms = 40) {
    if (!(xi > 0) || xi >= M_PI) throw regime_error("csch Bernoulli series needs 0 < xi < pi");
    LaurentSeries s = csch_series(terms);
    for (int r = 0; r < order; ++r) s = s.derivative();
    return s.evaluate(xi);
}

}  // namespace ymwk
