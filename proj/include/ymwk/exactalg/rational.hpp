#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "ymwk/error.hpp"

namespace ymwk {

using BigInt = boost::multiprecision::cpp_int;
// cpp_rational keeps itself in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::cpp_bin_float_50;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(const BigInt& p, const BigInt& q) {
    if (q == 0) throw usage_error("rational with zero denominator");
    return Rational(p, q);
}

inline Rational rational_pow(const Rational& r, int e) {
    Rational base = e < 0 ? Rational(1) / r : r;
    Rational out = 1;
    for (unsigned k = static_cast<unsigned>(e < 0 ? -e : e); k; k >>= 1) {
        if (k & 1u) out *= base;
        base *= base;
    }
    return out;
}

inline HighFloat to_high(const Rational& r) {
    return HighFloat(num(r)) / HighFloat(den(r));
}

inline double to_double(const Rational& r) { return static_cast<double>(to_high(r)); }

// "p" or "p/q" with the sign on the numerator.
inline std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline Rational parse_rational(std::string_view s) {
    auto digits_ok = [](std::string_view d, bool allow_sign) {
        if (allow_sign && !d.empty() && (d[0] == '-' || d[0] == '+')) d.remove_prefix(1);
        if (d.empty()) return false;
        for (char c : d)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string_view p = s.substr(0, slash);
    std::string_view q = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!digits_ok(p, true) || !digits_ok(q, false))
        throw usage_error("malformed rational '" + std::string(s) + "'");
    std::string ps(p);
    if (ps[0] == '+') ps.erase(0, 1);
    return make_rational(BigInt(ps), BigInt(std::string(q)));
}

inline BigInt factorial(int n) {
    if (n < 0) throw usage_error("factorial of negative integer");
    BigInt out = 1;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

// n!! with (-1)!! = 0!! = 1.
inline BigInt double_factorial(int n) {
    if (n < -1) throw usage_error("double factorial needs n >= -1, got " + std::to_string(n));
    BigInt out = 1;
    for (int k = n; k > 1; k -= 2) out *= k;
    return out;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
    return out;
}

inline BigInt pow2(int e) { return BigInt(1) << e; }

}  // namespace ymwk
