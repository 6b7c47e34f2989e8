#pragma once

#include <string>
#include <string_view>

#include "ymwk/exactalg/rational.hpp"

namespace ymwk {

// Element of Q(i).
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(int re) : re_(re) {}
    GaussRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return {0, 1}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    GaussRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        Rational d = o.norm();
        if (d == 0) throw usage_error("division by zero in Q(i)");
        *this *= o.conj();
        re_ /= d;
        im_ /= d;
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_ = 0;
    Rational im_ = 0;
};

// Text forms: "r", "ri", "(r+si)" / "(r-si)".
inline std::string to_string(const GaussRational& z) {
    if (z.is_real()) return to_string(z.re());
    if (z.re() == 0) return to_string(z.im()) + "i";
    std::string im = to_string(z.im());
    if (im[0] != '-') im = "+" + im;
    return "(" + to_string(z.re()) + im + "i)";
}

inline GaussRational parse_gauss_rational(std::string_view s) {
    if (s.empty()) throw usage_error("empty coefficient");
    if (s.front() == '(') {
        if (s.size() < 4 || s.back() != ')' || s[s.size() - 2] != 'i')
            throw usage_error("malformed complex coefficient '" + std::string(s) + "'");
        std::string_view body = s.substr(1, s.size() - 3);
        auto split = body.find_first_of("+-", 1);
        if (split == std::string_view::npos)
            throw usage_error("malformed complex coefficient '" + std::string(s) + "'");
        return {parse_rational(body.substr(0, split)), parse_rational(body.substr(split))};
    }
    if (s.back() == 'i') return {0, parse_rational(s.substr(0, s.size() - 1))};
    return {parse_rational(s), 0};
}

}  // namespace ymwk
