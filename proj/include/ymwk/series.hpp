#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "ymwk/exactalg/rational.hpp"

namespace ymwk {

struct SeriesTerm {
    int n = 0;
    int lambda_power = 0;                 // power of lambda (2n)
    std::optional<Rational> coefficient;  // exact coefficient of lambda^{2n} when available
    double coefficient_value = 0.0;
    long double log_abs = 0.0L;           // ln |term| at the evaluation point
    int sign = 1;
    double value = 0.0;                   // may underflow to 0 far out; log_abs stays exact
    double cumulative = 0.0;

    friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

// Truncation rule: keep terms while magnitudes do not increase; the first term
// larger than its predecessor is the first omitted one.
struct AsymptoticSeries {
    double lambda2 = 0.0;
    std::vector<SeriesTerm> terms;
    int optimal_index = -1;  // n of the last retained term
    double partial_sum = 0.0;
    double first_omitted = 0.0;
    long double first_omitted_log = 0.0L;  // ln of first_omitted, survives underflow
    bool minimum_found = false;

    bool improving(int n) const { return optimal_index < 0 || n <= optimal_index; }
    friend bool operator==(const AsymptoticSeries&, const AsymptoticSeries&) = default;
};

inline void apply_truncation(AsymptoticSeries& s) {
    double sum = 0.0;
    s.minimum_found = false;
    s.optimal_index = s.terms.empty() ? -1 : s.terms.back().n;
    for (std::size_t j = 0; j < s.terms.size(); ++j) {
        auto& term = s.terms[j];
        sum += term.value;
        term.cumulative = sum;
        if (!s.minimum_found && j + 1 < s.terms.size() && s.terms[j + 1].log_abs > term.log_abs) {
            s.minimum_found = true;
            s.optimal_index = term.n;
            s.partial_sum = sum;
            s.first_omitted = std::fabs(s.terms[j + 1].value);
            s.first_omitted_log = s.terms[j + 1].log_abs;
        }
    }
    if (!s.minimum_found) {
        s.partial_sum = sum;
        s.first_omitted = s.terms.empty() ? 0.0 : std::fabs(s.terms.back().value);
        s.first_omitted_log = s.terms.empty() ? 0.0L : s.terms.back().log_abs;
    }
}

}  // namespace ymwk
