#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ymwk/report/config.hpp"
#include "ymwk/series.hpp"
#include "ymwk/spectral/partition.hpp"
#include "ymwk/version.hpp"
#include "ymwk/wk/bloch.hpp"
#include "ymwk/wk/imn.hpp"

namespace ymwk {

using json = nlohmann::json;

// Non-finite doubles become strings so that they survive the trip through JSON.
inline json json_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}
inline double double_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw usage_error("not a number in JSON: " + s);
}
// long double keeps 21 significant digits as text.
inline json json_long_double(long double v) {
    std::ostringstream os;
    os.precision(21);
    os << v;
    return os.str();
}
inline long double long_double_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    return std::strtold(j.get<std::string>().c_str(), nullptr);
}

// ---- RunConfig and validity ----

inline void to_json(json& j, const RunConfig& c) {
    j = json{{"command", c.command}, {"g", c.g},           {"hbar", c.hbar},        {"t", c.t},
             {"Q", c.Q},             {"kmax", c.kmax},     {"format", c.format},    {"precision", c.precision},
             {"seed", c.seed},       {"out", c.out},       {"options", c.options}};
}
inline void from_json(const json& j, RunConfig& c) {
    j.at("command").get_to(c.command);
    j.at("g").get_to(c.g);
    j.at("hbar").get_to(c.hbar);
    j.at("t").get_to(c.t);
    j.at("Q").get_to(c.Q);
    j.at("kmax").get_to(c.kmax);
    j.at("format").get_to(c.format);
    j.at("precision").get_to(c.precision);
    j.at("seed").get_to(c.seed);
    j.at("out").get_to(c.out);
    j.at("options").get_to(c.options);
}

struct Validity {
    double adiabatic_parameter = 0.0;
    bool adiabatic_ok = false;
    double wigner_parameter = 0.0;
    bool wigner_ok = false;
    double u = 0.0;
    bool series_ok = false;
    double lambda2 = 0.0;
    double K = 0.0;

    static Validity of(const ModelParams& p) {
        return {p.adiabatic_parameter(), p.adiabatic_ok(), p.wigner_parameter(), p.wigner_ok(), p.u(), p.series_ok(),
                p.lambda2(), p.K()};
    }
    friend bool operator==(const Validity&, const Validity&) = default;
};

inline void to_json(json& j, const Validity& v) {
    j = json{{"g2_t_Q4", v.adiabatic_parameter}, {"adiabatic_ok", v.adiabatic_ok}, {"hbar_t34", v.wigner_parameter},
             {"semiclassical_ok", v.wigner_ok},    {"u", v.u},                       {"series_ok", v.series_ok},
             {"lambda2", v.lambda2},               {"K", v.K}};
}
inline void from_json(const json& j, Validity& v) {
    j.at("g2_t_Q4").get_to(v.adiabatic_parameter);
    j.at("adiabatic_ok").get_to(v.adiabatic_ok);
    j.at("hbar_t34").get_to(v.wigner_parameter);
    j.at("semiclassical_ok").get_to(v.wigner_ok);
    j.at("u").get_to(v.u);
    j.at("series_ok").get_to(v.series_ok);
    j.at("lambda2").get_to(v.lambda2);
    j.at("K").get_to(v.K);
}

// Every report: reproducibility header, echoed validity flags, command result.
struct Report {
    std::string artifact = kArtifactName;
    std::string version = kArtifactVersion;
    RunConfig config;
    Validity validity;
    json result = json::object();

    friend bool operator==(const Report&, const Report&) = default;
};

inline Report make_report(const RunConfig& c) {
    Report r;
    r.config = c;
    r.validity = Validity::of(c.params());
    return r;
}

inline void to_json(json& j, const Report& r) {
    j = json{{"artifact", r.artifact}, {"version", r.version}, {"config", r.config}, {"validity", r.validity},
             {"result", r.result}};
}
inline void from_json(const json& j, Report& r) {
    j.at("artifact").get_to(r.artifact);
    j.at("version").get_to(r.version);
    j.at("config").get_to(r.config);
    j.at("validity").get_to(r.validity);
    r.result = j.at("result");
}

// ---- symbolic results ----

inline void to_json(json& j, const ImnEntry& e) {
    j = json{{"coefficient", to_string(e.coefficient)},
             {"m", e.m},
             {"n", e.n},
             {"g_power", e.g_power},
             {"t_power", e.t_power},
             {"logarithmic", e.logarithmic},
             {"subdominant", e.subdominant},
             {"ell", e.ell}};
}
inline void from_json(const json& j, ImnEntry& e) {
    e.coefficient = parse_rational(j.at("coefficient").get<std::string>());
    j.at("m").get_to(e.m);
    j.at("n").get_to(e.n);
    j.at("g_power").get_to(e.g_power);
    j.at("t_power").get_to(e.t_power);
    j.at("logarithmic").get_to(e.logarithmic);
    j.at("subdominant").get_to(e.subdominant);
    j.at("ell").get_to(e.ell);
}
inline void to_json(json& j, const ImnDecomposition& d) { j = json{{"k", d.k}, {"entries", d.entries}}; }
inline void from_json(const json& j, ImnDecomposition& d) {
    j.at("k").get_to(d.k);
    j.at("entries").get_to(d.entries);
}

inline void to_json(json& j, const BlochOrder& o) {
    j = json{{"k", o.k},
             {"residual_zero", o.residual_zero},
             {"initial_condition_ok", o.initial_condition_ok},
             {"residual_terms", o.residual_terms}};
}
inline void from_json(const json& j, BlochOrder& o) {
    j.at("k").get_to(o.k);
    j.at("residual_zero").get_to(o.residual_zero);
    j.at("initial_condition_ok").get_to(o.initial_condition_ok);
    j.at("residual_terms").get_to(o.residual_terms);
}
inline void to_json(json& j, const BlochReport& r) {
    j = json{{"potential", r.potential}, {"orders", r.orders}, {"all_ok", r.all_ok()}};
}
inline void from_json(const json& j, BlochReport& r) {
    j.at("potential").get_to(r.potential);
    j.at("orders").get_to(r.orders);
}

// ---- numerical results ----

inline void to_json(json& j, const SeriesTerm& t) {
    j = json{{"n", t.n},
             {"lambda_power", t.lambda_power},
             {"coefficient", t.coefficient ? json(to_string(*t.coefficient)) : json(nullptr)},
             {"coefficient_value", json_double(t.coefficient_value)},
             {"log_abs", json_long_double(t.log_abs)},
             {"sign", t.sign},
             {"value", json_double(t.value)},
             {"cumulative", json_double(t.cumulative)}};
}
inline void from_json(const json& j, SeriesTerm& t) {
    j.at("n").get_to(t.n);
    j.at("lambda_power").get_to(t.lambda_power);
    const json& c = j.at("coefficient");
    t.coefficient = c.is_null() ? std::nullopt : std::optional<Rational>(parse_rational(c.get<std::string>()));
    t.coefficient_value = double_from_json(j.at("coefficient_value"));
    t.log_abs = long_double_from_json(j.at("log_abs"));
    j.at("sign").get_to(t.sign);
    t.value = double_from_json(j.at("value"));
    t.cumulative = double_from_json(j.at("cumulative"));
}
inline void to_json(json& j, const AsymptoticSeries& s) {
    j = json{{"lambda2", s.lambda2},
             {"terms", s.terms},
             {"optimal_index", s.optimal_index},
             {"partial_sum", json_double(s.partial_sum)},
             {"first_omitted", json_double(s.first_omitted)},
             {"first_omitted_log", json_long_double(s.first_omitted_log)},
             {"minimum_found", s.minimum_found}};
}
inline void from_json(const json& j, AsymptoticSeries& s) {
    j.at("lambda2").get_to(s.lambda2);
    j.at("terms").get_to(s.terms);
    j.at("optimal_index").get_to(s.optimal_index);
    s.partial_sum = double_from_json(j.at("partial_sum"));
    s.first_omitted = double_from_json(j.at("first_omitted"));
    s.first_omitted_log = long_double_from_json(j.at("first_omitted_log"));
    j.at("minimum_found").get_to(s.minimum_found);
}

inline void to_json(json& j, const Spectrum& s) {
    j = json{{"params", {{"g", s.g}, {"hbar", s.hbar}}},
             {"basis", {{"description", s.basis}, {"size", s.basis_size}, {"solver", s.solver},
                        {"complete_below", json_double(s.complete_below)}}},
             {"eigenvalues", s.eigenvalues},
             {"convergence", s.convergence},
             {"residuals", s.residuals}};
}
inline void from_json(const json& j, Spectrum& s) {
    j.at("params").at("g").get_to(s.g);
    j.at("params").at("hbar").get_to(s.hbar);
    const json& b = j.at("basis");
    b.at("description").get_to(s.basis);
    b.at("size").get_to(s.basis_size);
    b.at("solver").get_to(s.solver);
    s.complete_below = double_from_json(b.at("complete_below"));
    j.at("eigenvalues").get_to(s.eigenvalues);
    j.at("convergence").get_to(s.convergence);
    j.at("residuals").get_to(s.residuals);
}

inline void to_json(json& j, const SpectralZ& z) {
    j = json{{"t", z.t},       {"value", z.value},           {"sum", z.sum},
             {"tail", z.tail}, {"convergence", z.convergence}, {"error_band", z.error_band},
             {"levels", z.levels}};
}
inline void from_json(const json& j, SpectralZ& z) {
    j.at("t").get_to(z.t);
    j.at("value").get_to(z.value);
    j.at("sum").get_to(z.sum);
    j.at("tail").get_to(z.tail);
    j.at("convergence").get_to(z.convergence);
    j.at("error_band").get_to(z.error_band);
    j.at("levels").get_to(z.levels);
}

// Round trip through text.
template <class T>
T json_round_trip(const T& x) {
    return json::parse(json(x).dump()).template get<T>();
}

}  // namespace ymwk
