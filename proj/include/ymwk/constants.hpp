#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ymwk/exactalg/rational.hpp"

namespace ymwk {

// 160 decimal digits: enough to resolve the smallest Euler-sum terms for m <= 20.
using WideFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<160>>;

template <class T = HighFloat>
T euler_gamma() {
    return boost::math::constants::euler<T>();
}
template <class T = HighFloat>
T ln2() {
    return boost::math::constants::ln_two<T>();
}
template <class T = HighFloat>
T pi() {
    return boost::math::constants::pi<T>();
}
template <class T = HighFloat>
T zeta(int s) {
    return boost::math::zeta(T(s));
}

template <class T>
T to_float(const Rational& r) {
    return T(num(r)) / T(den(r));
}

}  // namespace ymwk
