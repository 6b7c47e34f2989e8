#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "ymwk/central/imn_closed.hpp"
#include "ymwk/series.hpp"
#include "ymwk/wk/imn.hpp"
#include "ymwk/wk/recursion.hpp"

namespace ymwk {

// Payload of an m == n term: coefficient of ln(g^2 Q^4 t) and the constant.
struct LogPayload {
    Rational log_coefficient;
    double constant = 0.0;
};

// Contribution coefficient * suppression * K (hbar g t Q)^k.
struct CentralTerm {
    int k = 0;
    Rational coefficient;
    double suppression = 1.0;
    bool subdominant = false;
    std::optional<LogPayload> log;

    double value(const ModelParams& p) const {
        return p.K() * to_double(coefficient) * suppression * std::pow(p.hgtQ(), k);
    }
};

// Quartic W_k decompositions are reused across calls; the cache only grows.
inline ImnDecomposition quartic_decomposition(int k) {
    static std::mutex mu;
    static std::map<int, ImnDecomposition> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    WkSequence seq = wk_sequence(PotentialSpec::quartic_xy(), k);
    ImnDecomposition d = imn_decompose(reduce_momentum(seq.orders[k], 2), k);
    std::lock_guard lock(mu);
    return cache.try_emplace(k, std::move(d)).first->second;
}

// Dominant (m - n = k/2) part of the square contribution in units of
// K (hbar g t Q)^k, assembled from the leading closed form of each I_mn.
inline Rational square_dominant_coefficient(const ImnDecomposition& d) {
    if (d.k < 2 || d.k % 2) throw usage_error("square contribution needs even k >= 2");
    Rational total = 0;
    for (const auto& e : d.leading()) {
        // hbar^{k-2}/(2 pi) * 2 pi c t^tp g^gp * sqrt(2 pi) (g^2 t)^{-(n+1/2)} (2n-1)!!/(m-n) Q^{2(m-n)}
        // divided by K (hbar g t Q)^k must be free of t and g.
        if (e.t_power - e.n + 1 - d.k != 0 || e.g_power - 2 * e.n - d.k != 0 || 2 * e.difference() != d.k)
            throw error("leading I_mn entry with unexpected power bookkeeping at k = " + std::to_string(d.k));
        total += e.coefficient * Rational(double_factorial(2 * e.n - 1)) / Rational(e.difference());
    }
    return total;
}

inline CentralTerm zk_square(int k, const ModelParams& p) {
    if (k != 2 && k != 4 && k != 6 && k != 8) throw usage_error("zk_square supports k in {2,4,6,8}");
    (void)p;
    return {k, square_dominant_coefficient(quartic_decomposition(k)), 1.0, false, std::nullopt};
}

// Scaling estimate for the subdominant entries m - n = k/2 - 2 ell.
// ell = 0: (2n-1)!!/2^{n-1}; ell >= 1: (g^4 t Q^4)^{-ell} (2n-1)!!/(2^{n-1}(k - 4 ell)).
inline CentralTerm zk_square_subdominant(int k, int ell, int m, int n, const ModelParams& p) {
    if (k < 2 || k % 2 || ell < 0 || n < 0 || m - n != k / 2 - 2 * ell || k - 4 * ell <= 0)
        throw usage_error("inconsistent (k, ell, m, n) for a subdominant square term");
    Rational c(double_factorial(2 * n - 1));
    c /= Rational(pow2(n)) / 2;
    CentralTerm term{k, c, 1.0, ell > 0, std::nullopt};
    if (ell > 0) {
        term.coefficient /= (k - 4 * ell);
        term.suppression = std::pow(std::pow(p.g, 4) * p.t * std::pow(p.Q, 4), -ell);
    }
    return term;
}

// a_m^{(n)}: coefficients of (g^2 t)^m I_mm inside Z_{4n}, m = 0..3n.
inline std::vector<Rational> extract_a_coefficients(int n) {
    if (n < 1) throw usage_error("a-coefficients exist for n >= 1");
    const int k = 4 * n;
    ImnDecomposition d = quartic_decomposition(k);
    std::vector<Rational> a(3 * n + 1, Rational(0));
    for (const auto& e : d.diagonal()) {
        // Z_k contribution / (K lambda^{2n}) is c (g^2 t)^{...} only if powers line up.
        if (e.t_power != e.m - 1 + 3 * n || e.g_power != 2 * e.m + 2 * n)
            throw error("diagonal entry with unexpected power bookkeeping");
        if (e.m > 3 * n) throw error("diagonal entry beyond m = 3n");
        a[e.m] = e.coefficient;
    }
    return a;
}

// Coefficient of ln(g^2 Q^4 t) multiplying K lambda^{2n}: sum_m a_m (2m-1)!!.
inline Rational central_log_residual(const std::vector<Rational>& a) {
    Rational s = 0;
    for (std::size_t m = 0; m < a.size(); ++m) s += a[m] * Rational(double_factorial(2 * static_cast<int>(m) - 1));
    return s;
}

struct CentralQIndependent {
    AsymptoticSeries series;              // constants, exact harmonic sums
    std::vector<Rational> log_residuals;  // per n, coefficient of ln(g^2 Q^4 t)
    std::vector<double> euler_constants;  // per n, constants with Euler-resummed harmonic sums
    std::vector<double> euler_errors;     // per n, sum of first-omitted bounds
};

// Per-order constants a_0 (C + ln 2) + sum_{m>=1} a_m (2m-1)!! [C + ln 2 - 2 sum_l 1/(2l-1)],
// once with the exact finite sums and once with the Euler form truncated at its smallest term.
inline CentralQIndependent central_q_independent(int nmax, const std::map<int, std::vector<Rational>>& coeffs,
                                                 double lambda2 = 0.0) {
    CentralQIndependent out;
    out.series.lambda2 = lambda2;
    const WideFloat c_ln2 = euler_gamma<WideFloat>() + ln2<WideFloat>();
    for (int n = 1; n <= nmax; ++n) {
        auto it = coeffs.find(n);
        if (it == coeffs.end()) throw usage_error("missing a-coefficients for n = " + std::to_string(n));
        const auto& a = it->second;
        WideFloat exact = 0, resummed = 0, err = 0;
        for (std::size_t m = 0; m < a.size(); ++m) {
            WideFloat w = to_float<WideFloat>(a[m] * Rational(double_factorial(2 * static_cast<int>(m) - 1)));
            if (m == 0) {
                exact += w * c_ln2;
                resummed += w * c_ln2;
                continue;
            }
            exact += w * (c_ln2 + to_float<WideFloat>(imm_bracket_constant(static_cast<int>(m))));
            EulerSum es = odd_harmonic_euler(static_cast<int>(m));
            resummed += w * (c_ln2 - 2 * es.value);
            err += abs(w) * 2 * es.first_omitted;
        }
        SeriesTerm term;
        term.n = n;
        term.lambda_power = 2 * n;
        term.coefficient_value = static_cast<double>(exact);
        double v = lambda2 > 0 ? term.coefficient_value * std::pow(lambda2, n) : term.coefficient_value;
        term.value = v;
        term.sign = v < 0 ? -1 : 1;
        term.log_abs = v == 0 ? -INFINITY : std::log(std::fabs(static_cast<long double>(v)));
        out.series.terms.push_back(term);
        out.log_residuals.push_back(central_log_residual(a));
        out.euler_constants.push_back(static_cast<double>(resummed));
        out.euler_errors.push_back(static_cast<double>(err));
    }
    apply_truncation(out.series);
    return out;
}

// Zeroth-order square term from I_00, in units of K: ln(g^2 Q^4 t) + C + ln 2.
inline double z0_square_units(const ModelParams& p) {
    return std::log(p.adiabatic_parameter()) + static_cast<double>(euler_gamma() + ln2());
}

// Improved Thomas-Fermi baseline in units of K: ln(1/lambda^2) + 9 ln 2 + C.
inline double z_tf_units(const ModelParams& p) {
    return -std::log(p.lambda2()) + static_cast<double>(9 * ln2() + euler_gamma());
}

}  // namespace ymwk
