#pragma once

#include <cmath>

#include "ymwk/central/params.hpp"
#include "ymwk/constants.hpp"
#include "ymwk/exactalg/bernoulli.hpp"

namespace ymwk {

enum class Correction { none, exponent };

// Leading large-Q form of I_mn (m > n), optionally with the finite-Q factor
// [1 - ((2m-1)!!/(2n-1)!!) (g^2 Q^4 t)^{n-m}].
inline double imn_leading(int m, int n, const ModelParams& p, Correction corr = Correction::none) {
    if (n < 0 || m <= n) throw usage_error("imn_leading needs m > n >= 0 (use imm_log for m == n)");
    p.require_adiabatic();
    const int d = m - n;
    double dfn = static_cast<double>(double_factorial(2 * n - 1));
    double value = std::sqrt(2.0 * M_PI) * std::pow(p.g * std::sqrt(p.t), -(2 * n + 1)) * dfn / d *
                   std::pow(p.Q, 2 * d);
    if (corr == Correction::exponent) {
        double ratio = static_cast<double>(to_high(Rational(double_factorial(2 * m - 1), double_factorial(2 * n - 1))));
        value *= 1.0 - ratio * std::pow(p.adiabatic_parameter(), -d);
    }
    return value;
}

// sum_{l=1}^m 1/(2l-1)
inline Rational odd_harmonic(int m) {
    if (m < 0) throw usage_error("odd harmonic sum needs m >= 0");
    Rational s = 0;
    for (int l = 1; l <= m; ++l) s += Rational(1, 2 * l - 1);
    return s;
}

// Bracket constant -2 sum_{l<=m} 1/(2l-1) of the diagonal integrals.
inline Rational imm_bracket_constant(int m) { return -2 * odd_harmonic(m); }

// I_mm = sqrt(2 pi)(2m-1)!! (g^2 t)^{-(m+1/2)} [ln(g^2 Q^4 t) + C + ln 2 - 2 sum 1/(2l-1)]
inline double imm_log(int m, const ModelParams& p) {
    if (m < 0) throw usage_error("imm_log needs m >= 0");
    p.require_adiabatic();
    double c = p.g * p.g * p.t;
    double bracket = std::log(p.adiabatic_parameter()) + static_cast<double>(euler_gamma() + ln2()) +
                     to_double(imm_bracket_constant(m));
    return std::sqrt(2.0 * M_PI) * static_cast<double>(double_factorial(2 * m - 1)) * std::pow(c, -(m + 0.5)) *
           bracket;
}

// Euler's asymptotic replacement of the odd harmonic sum.
//   corrected: 1/2 [C + ln(4m) + sum_k (2^{2k-1}-1) B_{2k} / (k (4m^2)^k)]
//   printed:   1/2 [C + ln(2m) + sum_k (2^{2k-1}-1) B_{2k} / (8m^2)^k]
enum class EulerForm { corrected, printed };

struct EulerSum {
    WideFloat value;
    WideFloat first_omitted;  // magnitude of the first omitted term inside the bracket, halved
    int terms_used = 0;
};

inline WideFloat euler_term(int m, int k, EulerForm form) {
    Rational b = bernoulli(2 * k);
    BigInt w = pow2(2 * k - 1) - 1;
    Rational c;
    if (form == EulerForm::corrected)
        c = Rational(w) * b / (Rational(k) * rational_pow(Rational(4 * m * m), k));
    else
        c = Rational(w) * b / rational_pow(Rational(8 * m * m), k);
    return to_float<WideFloat>(c);
}

inline EulerSum odd_harmonic_euler(int m, EulerForm form = EulerForm::corrected, int max_terms = 600) {
    if (m < 1) throw usage_error("Euler form needs m >= 1");
    WideFloat head = euler_gamma<WideFloat>() + log(WideFloat(form == EulerForm::corrected ? 4 * m : 2 * m));
    WideFloat sum = 0;
    WideFloat prev = euler_term(m, 1, form);
    int used = 0;
    WideFloat omitted = 0;
    for (int k = 1; k <= max_terms; ++k) {
        WideFloat term = k == 1 ? prev : euler_term(m, k, form);
        if (k > 1 && abs(term) > abs(prev)) {
            omitted = abs(term);
            break;
        }
        sum += term;
        prev = term;
        used = k;
    }
    if (omitted == 0) omitted = abs(euler_term(m, used + 1, form));
    return {(head + sum) / 2, omitted / 2, used};
}

}  // namespace ymwk
