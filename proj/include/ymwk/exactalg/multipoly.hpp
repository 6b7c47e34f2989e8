#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ymwk/exactalg/gauss_rational.hpp"
#include "ymwk/exactalg/rational.hpp"

namespace ymwk {

// Symbol sets. Order fixes the lexicographic term order and the text layout.
struct PhaseSpaceAlphabet {
    static constexpr std::array<std::string_view, 7> symbols{"x", "y", "px", "py", "t", "alpha", "g"};
};

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const GaussRational& c) { return c.is_zero(); }

template <class C>
C parse_coeff(std::string_view s);
template <>
inline Rational parse_coeff<Rational>(std::string_view s) { return parse_rational(s); }
template <>
inline GaussRational parse_coeff<GaussRational>(std::string_view s) { return parse_gauss_rational(s); }

// Sparse polynomial with exact coefficients and signed integer exponents.
// Negative exponents are allowed so that Laurent-type bookkeeping can reuse
// the same container; antidifferentiation refuses to produce a logarithm.
template <class Alphabet, class Coeff = GaussRational>
class MultiPoly {
public:
    static constexpr std::size_t N = Alphabet::symbols.size();
    using Exponents = std::array<int, N>;
    using Terms = std::map<Exponents, Coeff>;

    MultiPoly() = default;
    MultiPoly(const Coeff& c) { add_term(Exponents{}, c); }
    MultiPoly(int c) : MultiPoly(Coeff(c)) {}

    static MultiPoly monomial(const Coeff& c, const Exponents& e) {
        MultiPoly p;
        p.add_term(e, c);
        return p;
    }

    static std::size_t index_of(std::string_view name) {
        for (std::size_t k = 0; k < N; ++k)
            if (Alphabet::symbols[k] == name) return k;
        throw usage_error("unknown symbol '" + std::string(name) + "'");
    }

    static MultiPoly symbol(std::string_view name, int power = 1) {
        Exponents e{};
        e[index_of(name)] = power;
        return monomial(Coeff(1), e);
    }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Coeff& c) {
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    Coeff coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const Coeff& s) {
        if (coeff_is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Coeff(-1); }
    friend MultiPoly operator*(MultiPoly a, const Coeff& s) { return a *= s; }
    friend MultiPoly operator*(const Coeff& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (std::size_t k = 0; k < N; ++k) e[k] = ea[k] + eb[k];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    MultiPoly diff(std::size_t idx) const {
        MultiPoly out;
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exponents d = e;
            --d[idx];
            out.add_term(d, c * Coeff(e[idx]));
        }
        return out;
    }
    MultiPoly diff(std::string_view name) const { return diff(index_of(name)); }

    // Antiderivative with zero integration constant.
    MultiPoly antiderivative(std::size_t idx) const {
        MultiPoly out;
        for (const auto& [e, c] : terms_) {
            if (e[idx] == -1)
                throw usage_error("antiderivative of " + std::string(Alphabet::symbols[idx]) +
                                  "^-1 is not polynomial");
            Exponents d = e;
            ++d[idx];
            out.add_term(d, c / Coeff(d[idx]));
        }
        return out;
    }

    int max_degree(std::size_t idx) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[idx] > m) m = e[idx];
            first = false;
        }
        return m;
    }

    // Terms whose exponent of symbol idx equals `power`.
    MultiPoly slice(std::size_t idx, int power) const {
        MultiPoly out;
        for (const auto& [e, c] : terms_)
            if (e[idx] == power) out.add_term(e, c);
        return out;
    }

private:
    Terms terms_;
};

template <class A, class C>
std::string to_text(const MultiPoly<A, C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out += " + ";
        first = false;
        out += to_string(c);
        out += " *";
        for (std::size_t k = 0; k < MultiPoly<A, C>::N; ++k) {
            out += ' ';
            out += A::symbols[k];
            out += '^';
            out += std::to_string(e[k]);
        }
    }
    return out;
}

template <class A, class C = GaussRational>
MultiPoly<A, C> parse_poly(std::string_view text) {
    using P = MultiPoly<A, C>;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    P out;
    if (text == "0") return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string_view term = text.substr(pos, next == std::string_view::npos ? next : next - pos);
        auto star = term.find(" * ");
        if (star == std::string_view::npos) throw usage_error("term without ' * ': '" + std::string(term) + "'");
        C c = parse_coeff<C>(trim(term.substr(0, star)));
        typename P::Exponents e{};
        std::vector<bool> seen(P::N, false);
        std::istringstream factors{std::string(term.substr(star + 3))};
        std::string f;
        while (factors >> f) {
            auto caret = f.find('^');
            if (caret == std::string::npos) throw usage_error("factor without exponent: '" + f + "'");
            std::size_t idx = P::index_of(std::string_view(f).substr(0, caret));
            if (seen[idx]) throw usage_error("repeated symbol in term: '" + std::string(term) + "'");
            seen[idx] = true;
            try {
                e[idx] = std::stoi(f.substr(caret + 1));
            } catch (const std::exception&) {
                throw usage_error("bad exponent in '" + f + "'");
            }
        }
        out.add_term(e, c);
        if (next == std::string_view::npos) break;
        pos = next + 3;
    }
    return out;
}

using PhasePoly = MultiPoly<PhaseSpaceAlphabet, GaussRational>;

// Antiderivative in t with zero constant.
inline PhasePoly poly_int_t(const PhasePoly& p) { return p.antiderivative(PhasePoly::index_of("t")); }
inline PhasePoly poly_diff(const PhasePoly& p, std::string_view s) { return p.diff(s); }

}  // namespace ymwk
