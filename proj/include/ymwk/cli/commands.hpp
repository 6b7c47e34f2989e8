#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ymwk/central.hpp"
#include "ymwk/channels.hpp"
#include "ymwk/report/json.hpp"
#include "ymwk/spectral.hpp"
#include "ymwk/wk.hpp"

namespace ymwk {

enum ExitCode : int { kExitOk = 0, kExitVerification = 1, kExitRegime = 2, kExitNumeric = 3 };

struct CommandResult {
    Report report;
    int exit_code = kExitOk;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

namespace detail {

inline std::string fmt(double v, int precision) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

inline const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace detail

// ---- expand ----

inline CommandResult cmd_expand(const RunConfig& c) {
    const std::string potential = c.option("potential", "quartic-xy");
    const int ceiling = c.option_int("kmax-ceiling", 10);
    if (c.kmax < 0) throw usage_error("kmax must be >= 0");
    if (c.kmax > ceiling)
        throw usage_error("kmax " + std::to_string(c.kmax) + " exceeds the ceiling " + std::to_string(ceiling) +
                          " (raise it with --kmax-ceiling)");
    const PotentialSpec pot = PotentialSpec::by_name(potential);
    const WkSequence seq = wk_sequence(pot, c.kmax);
    const BlochReport bloch = verify_bloch(seq);

    CommandResult out{make_report(c)};
    json orders = json::array();
    for (int k = 0; k <= seq.kmax(); ++k) orders.push_back({{"k", k}, {"W", to_text(seq.orders[k])}});
    json imn = json::array();
    out.csv_header = {"k", "coef_num", "coef_den", "m", "n", "g_pow", "t_pow"};
    if (pot.dimension == 2) {
        for (int k = 2; k <= seq.kmax(); k += 2) {
            const ImnDecomposition d = imn_decompose(reduce_momentum(seq.orders[k], 2), k);
            imn.push_back(d);
            for (const auto& e : d.entries)
                out.csv_rows.push_back({std::to_string(k), num(e.coefficient).str(), den(e.coefficient).str(),
                                        std::to_string(e.m), std::to_string(e.n), std::to_string(e.g_power),
                                        std::to_string(e.t_power)});
        }
    }
    if (!c.out.empty()) {
        write_sequence(seq, c.out);
        if (pot.dimension == 2) {
            const auto dir = std::filesystem::path(c.out) / "imn" / pot.name;
            std::filesystem::create_directories(dir);
            for (const auto& d : imn) {
                const ImnDecomposition dec = d.get<ImnDecomposition>();
                std::ofstream f(dir / ("I" + std::to_string(dec.k) + ".csv"));
                f << to_csv(dec);
            }
        }
    }
    out.report.result = {{"potential", pot.name}, {"kmax", c.kmax}, {"orders", orders}, {"imn", imn},
                         {"bloch", bloch},        {"fixtures_written", !c.out.empty()}};
    out.exit_code = bloch.all_ok() ? kExitOk : kExitVerification;
    return out;
}

// ---- cancel-check ----

inline CommandResult cmd_cancel_check(const RunConfig& c) {
    const bool exploratory = c.option_flag("exploratory");
    const std::string model = c.option("channel-model", "adiabatic");
    const int kmax = c.kmax;
    const bool allowed = kmax == 2 || kmax == 4 || kmax == 6 || kmax == 8 || (exploratory && kmax == 10);
    if (!allowed) throw usage_error("cancel-check needs kmax in {2,4,6,8} (10 with --exploratory)");

    CommandResult out{make_report(c)};
    out.csv_header = {"k", "square", "channels", "sum", "verdict", "exploratory"};
    json rows = json::array();
    bool all_pass = true;

    if (model == "free") {
        if (kmax != 2) throw usage_error("the free-channel model is defined for kmax = 2 only");
        const ModelParams p = c.params();
        const FreeChannelResult fr = z2_free_channel(p);
        const Rational sq = zk_square(2, p).coefficient;
        const Rational q2 = sq + fr.hgtq2_coefficient;
        ZetaCombination residual = fr.constant;
        const bool pass = q2 == 0 && residual.rational == 0 && residual.zeta.empty();
        all_pass = pass;
        const std::string sum = "(" + to_string(q2) + ")*(hbar g t Q)^2 + " + residual.str();
        const std::string channels = "(" + to_string(fr.hgtq2_coefficient) + ")*(hbar g t Q)^2 + " + fr.constant.str();
        rows.push_back({{"k", 2},
                        {"square", to_string(sq)},
                        {"channels", channels},
                        {"sum", sum},
                        {"residual_K_units", fr.combined},
                        {"discarded_K_units", fr.discarded_value},
                        {"verdict", detail::verdict(pass)},
                        {"exploratory", false}});
        out.csv_rows.push_back({"2", to_string(sq), channels, sum,
                                detail::verdict(pass), "false"});
    } else if (model == "adiabatic") {
        for (int k = 2; k <= kmax; k += 2) {
            const Rational sq = square_dominant_coefficient(quartic_decomposition(k));
            const Rational ch = channel_leading_term(k).coefficient;
            const Rational sum = sq + ch;
            const bool pass = sum == 0, expl = k > 8;
            if (!expl) all_pass = all_pass && pass;
            rows.push_back({{"k", k},
                            {"square", to_string(sq)},
                            {"channels", to_string(ch)},
                            {"sum", to_string(sum)},
                            {"verdict", detail::verdict(pass)},
                            {"exploratory", expl}});
            out.csv_rows.push_back({std::to_string(k), to_string(sq), to_string(ch), to_string(sum),
                                    detail::verdict(pass), expl ? "true" : "false"});
        }
    } else {
        throw usage_error("unknown channel model '" + model + "' (expected adiabatic or free)");
    }
    out.report.result = {{"channel_model", model}, {"units", "K (hbar g t Q)^k"}, {"rows", rows},
                         {"all_pass", all_pass}};
    out.exit_code = all_pass ? kExitOk : kExitVerification;
    return out;
}

// ---- z ----

struct LeadingAssembly {
    json terms = json::array();
    std::vector<Rational> q_dependence;  // ln Q coefficient, then (hbar g t Q)^k for k = 2..8
    double dominant_units = 0.0;         // dominant terms with the k = 0 channel log expanded
    double full_units = 0.0;             // same with the complete 4 ln coth(u/2)
};

inline LeadingAssembly leading_assembly(const ModelParams& p) {
    p.require_all();
    LeadingAssembly a;
    const ChannelTerm c0 = z_channels_leading(0, p);
    // ln(g^2 Q^4 t) carries 4 ln Q; ln(4/(hbar g t Q)) carries -ln Q.
    const Rational lnq = Rational(4) - *c0.log_coefficient;
    a.q_dependence.push_back(lnq);
    const double sq0 = z0_square_units(p), ch0 = c0.value(p) / p.K();
    a.terms.push_back({{"k", 0},
                       {"square", "ln(g^2 Q^4 t) + C + ln 2"},
                       {"channels", to_string(*c0.log_coefficient) + " ln(4/(hbar g t Q))"},
                       {"lnQ_coefficient", to_string(lnq)},
                       {"square_units", sq0},
                       {"channels_units", ch0}});
    a.dominant_units = sq0 + ch0;
    double square_powers = 0.0;
    for (int k = 2; k <= 8; k += 2) {
        const Rational sq = zk_square(k, p).coefficient, ch = z_channels_leading(k, p).coefficient;
        a.q_dependence.push_back(sq + ch);
        const double w = std::pow(p.hgtQ(), k);
        a.terms.push_back({{"k", k},
                           {"square", to_string(sq)},
                           {"channels", to_string(ch)},
                           {"sum", to_string(sq + ch)},
                           {"square_units", to_double(sq) * w},
                           {"channels_units", to_double(ch) * w}});
        a.dominant_units += to_double(sq + ch) * w;
        square_powers += to_double(sq) * w;
    }
    a.full_units = sq0 + to_double(channel_series_coefficients(0).log_term) * std::log(1.0 / std::tanh(p.u() / 2.0)) +
                   square_powers;
    return a;
}

struct AsymptoticAssembly {
    AsymptoticSeries channels;
    CentralQIndependent central;
    double tf_units = 0.0;
    double total_units = 0.0;
};

inline AsymptoticAssembly asymptotic_assembly(const ModelParams& p) {
    p.require_wigner();
    AsymptoticAssembly a;
    const double l2 = p.lambda2();
    const double nopt = 24.0 * M_PI * M_PI / l2;
    if (nopt > 5e6) throw regime_error("lambda^2 = " + detail::fmt(l2, 6) + " puts the optimal truncation beyond 5e6 terms");
    a.channels = channel_q_independent(static_cast<int>(nopt * 1.05) + 20, l2);
    a.central = central_q_independent(2, {{1, extract_a_coefficients(1)}, {2, extract_a_coefficients(2)}}, l2);
    a.tf_units = z_tf_units(p);
    a.total_units = a.tf_units + a.channels.partial_sum;
    for (const auto& t : a.central.series.terms) a.total_units += t.value;
    return a;
}

struct SpectralAssembly {
    Spectrum coarse, fine;
    SpectralZ z_coarse, z_fine;
    double basis_agreement = 0.0;
    double tail_fraction = 0.0;
};

inline BasisSpec spectral_basis(const RunConfig& c, bool fine) {
    BasisSpec b;
    b.kind = BasisKind::grid;
    b.spacing = c.option_double(fine ? "spacing-fine" : "spacing", fine ? 0.15 : 0.17);
    b.size = c.option_int(fine ? "size-fine" : "size", fine ? 430 : 400);
    b.mask = GridMask{c.option_double("v-cut", 45.0), c.option_double("kappa", 4.0)};
    return b;
}

inline SpectralAssembly spectral_assembly(const RunConfig& c) {
    const ModelParams p = c.params();
    const double e_max = c.option_double("e-max", 32.0);
    SpectralAssembly s;
    s.fine = x2y2_spectrum_below(p.g, p.hbar, spectral_basis(c, true), e_max);
    if (c.option_int("bases", 2) >= 2) {
        s.coarse = x2y2_spectrum_below(p.g, p.hbar, spectral_basis(c, false), e_max);
        attach_convergence(s.fine, s.coarse);
        s.z_coarse = z_spectral(s.coarse, p.t, TailModel::improved_tf);
    }
    s.z_fine = z_spectral(s.fine, p.t, TailModel::improved_tf);
    s.basis_agreement = s.coarse.size() ? std::fabs(s.z_fine.value - s.z_coarse.value) / s.z_fine.value : 0.0;
    s.tail_fraction = s.z_fine.tail / s.z_fine.value;
    return s;
}

inline json spectral_json(const SpectralAssembly& s) {
    json j = {{"z_fine", s.z_fine},
              {"spectrum_fine", s.fine},
              {"basis_agreement", s.basis_agreement},
              {"tail_fraction", s.tail_fraction}};
    if (s.coarse.size()) {
        j["z_coarse"] = s.z_coarse;
        j["basis_coarse"] = s.coarse.basis;
    }
    return j;
}

inline CommandResult cmd_z(const RunConfig& c) {
    const std::string mode = c.option("mode", "tf");
    const ModelParams p = c.params();
    CommandResult out{make_report(c)};
    json& r = out.report.result;
    r["mode"] = mode;
    r["K"] = p.K();
    const int prec = c.precision;
    out.csv_header = {"quantity", "K_units", "absolute"};
    auto row = [&](const std::string& name, double units) {
        out.csv_rows.push_back({name, detail::fmt(units, prec), detail::fmt(units * p.K(), prec)});
    };

    if (mode == "tf") {
        p.require_wigner();
        const double u = z_tf_units(p);
        r["z_K_units"] = u;
        r["z"] = u * p.K();
        row("tf", u);
    } else if (mode == "leading") {
        const LeadingAssembly a = leading_assembly(p);
        json q = json::array();
        for (const auto& x : a.q_dependence) q.push_back(to_string(x));
        const double tf = z_tf_units(p);
        r["terms"] = a.terms;
        r["q_dependence_exact"] = q;
        r["dominant_K_units"] = a.dominant_units;
        r["full_K_units"] = a.full_units;
        r["tf_K_units"] = tf;
        r["full_minus_tf"] = a.full_units - tf;
        r["residual_scale"] = 1.0 / p.adiabatic_parameter();
        r["z"] = a.dominant_units * p.K();
        row("dominant", a.dominant_units);
        row("full_channel_log", a.full_units);
        row("tf", tf);
    } else if (mode == "with-asymptotic") {
        const AsymptoticAssembly a = asymptotic_assembly(p);
        json central = json::array();
        for (std::size_t i = 0; i < a.central.series.terms.size(); ++i)
            central.push_back({{"n", a.central.series.terms[i].n},
                               {"constant", a.central.series.terms[i].coefficient_value},
                               {"value_K_units", a.central.series.terms[i].value},
                               {"euler_constant", a.central.euler_constants[i]},
                               {"euler_error", a.central.euler_errors[i]},
                               {"log_residual", to_string(a.central.log_residuals[i])}});
        r["tf_K_units"] = a.tf_units;
        r["channel_series"] = {{"optimal_index", a.channels.optimal_index},
                               {"partial_sum", a.channels.partial_sum},
                               {"first_omitted_log", json_long_double(a.channels.first_omitted_log)},
                               {"minimum_found", a.channels.minimum_found}};
        r["central_constants"] = central;
        r["z_K_units"] = a.total_units;
        r["z"] = a.total_units * p.K();
        row("tf", a.tf_units);
        row("channel_series", a.channels.partial_sum);
        row("with_asymptotic", a.total_units);
    } else if (mode == "spectral") {
        const SpectralAssembly s = spectral_assembly(c);
        r["spectral"] = spectral_json(s);
        r["z"] = s.z_fine.value;
        r["z_K_units"] = s.z_fine.value / p.K();
        row("spectral", s.z_fine.value / p.K());
    } else if (mode == "compare") {
        const double tolerance = c.option_double("tolerance", 0.10);
        if (p.lambda2() > 1e-2)
            throw regime_error("comparison window needs lambda^2 = g^2 hbar^4 t^3 <= 1e-2, got " + detail::fmt(p.lambda2(), 6));
        const SpectralAssembly s = spectral_assembly(c);
        if (s.coarse.size() == 0) throw usage_error("compare mode needs two bases");
        if (!(s.basis_agreement <= 1e-3))
            throw regime_error("basis convergence gate: two bases differ by " + detail::fmt(s.basis_agreement, 3) +
                               " > 1e-3 relative");
        if (!(s.tail_fraction < 1e-2))
            throw regime_error("spectral tail fraction " + detail::fmt(s.tail_fraction, 3) + " >= 1e-2");
        const double spec_units = s.z_fine.value / p.K();
        const double band_units = s.z_fine.error_band / p.K() + std::fabs(s.z_fine.value - s.z_coarse.value) / p.K();
        json rows = json::array();
        bool ok = true;
        auto compare = [&](const std::string& name, double units) {
            const double dev = (units - spec_units) / spec_units;
            const bool within = std::fabs(dev) <= tolerance;
            ok = ok && within;
            rows.push_back({{"method", name}, {"K_units", units}, {"z", units * p.K()}, {"deviation", dev},
                            {"within_tolerance", within}});
            out.csv_rows.push_back({name, detail::fmt(units, prec), detail::fmt(units * p.K(), prec)});
        };
        out.csv_rows.push_back({"spectral", detail::fmt(spec_units, prec), detail::fmt(s.z_fine.value, prec)});
        compare("tf", z_tf_units(p));
        compare("with_asymptotic", asymptotic_assembly(p).total_units);
        r["spectral"] = spectral_json(s);
        r["spectral_K_units"] = spec_units;
        r["spectral_band_K_units"] = band_units;
        r["tolerance"] = tolerance;
        r["rows"] = rows;
        r["all_within_tolerance"] = ok;
        out.exit_code = ok ? kExitOk : kExitVerification;
    } else {
        throw usage_error("unknown z mode '" + mode + "' (expected tf, leading, with-asymptotic, spectral, compare)");
    }
    return out;
}

// ---- imn ----

inline CommandResult cmd_imn(const RunConfig& c) {
    const ModelParams p = c.params();
    std::vector<std::pair<int, int>> pairs;
    if (c.options.count("m") || c.options.count("n"))
        pairs.push_back({c.option_int("m", 0), c.option_int("n", 0)});
    else
        pairs = {{1, 0}, {2, 1}, {0, 0}};
    const long samples = c.option_int("samples", 200000);
    CommandResult out{make_report(c)};
    out.csv_header = {"m", "n", "closed", "corrected", "quadrature", "quad_error", "monte_carlo", "mc_stderr"};
    json rows = json::array();
    for (const auto& [m, n] : pairs) {
        if (m < 0 || n < 0) throw usage_error("I_mn needs m, n >= 0");
        if (m < n) throw usage_error("I_mn table needs m >= n (I_mn is symmetric; swap the indices)");
        const double closed = m == n ? imm_log(m, p) : imn_leading(m, n, p);
        const double corrected = m == n ? closed : imn_leading(m, n, p, Correction::exponent);
        const QuadResult q = quad_imn(m, n, p, {1e-12, 1e-11, 1'000'000});
        const MonteCarloEstimate mc = mc_imn(m, n, p, samples, c.seed);
        rows.push_back({{"m", m},
                        {"n", n},
                        {"closed", closed},
                        {"corrected", corrected},
                        {"quadrature", q.value},
                        {"quad_error", q.error},
                        {"monte_carlo", mc.value},
                        {"mc_stderr", mc.standard_error},
                        {"closed_rel_dev", (closed - q.value) / q.value},
                        {"corrected_rel_dev", (corrected - q.value) / q.value}});
        const int pr = c.precision;
        out.csv_rows.push_back({std::to_string(m), std::to_string(n), detail::fmt(closed, pr), detail::fmt(corrected, pr),
                                detail::fmt(q.value, pr), detail::fmt(q.error, pr), detail::fmt(mc.value, pr),
                                detail::fmt(mc.standard_error, pr)});
    }
    out.report.result = {{"rows", rows}, {"samples", samples}};
    return out;
}

// ---- phase-volume ----

inline CommandResult cmd_phase_volume(const RunConfig& c) {
    const double E = c.option_double("E", 1.0), L = c.option_double("L", 10.0);
    const int doublings = c.option_int("doublings", 4);
    if (doublings < 1) throw usage_error("doublings must be >= 1");
    CommandResult out{make_report(c)};
    const double asymptote = phase_volume_doubling_increment(E, c.g);
    out.csv_header = {"L", "volume", "increment", "asymptote"};
    json rows = json::array();
    double l = L, prev = classical_phase_volume(E, l, c.g);
    for (int i = 0; i < doublings; ++i) {
        const double next = classical_phase_volume(E, 2 * l, c.g);
        const double inc = next - prev;
        rows.push_back({{"L", 2 * l}, {"volume", next}, {"increment", inc}, {"asymptote", asymptote},
                        {"rel_dev", (inc - asymptote) / asymptote}});
        const int pr = c.precision;
        out.csv_rows.push_back({detail::fmt(2 * l, pr), detail::fmt(next, pr), detail::fmt(inc, pr), detail::fmt(asymptote, pr)});
        prev = next;
        l *= 2;
    }
    out.report.result = {{"E", E}, {"L0", L}, {"volume_L0", classical_phase_volume(E, L, c.g)}, {"rows", rows},
                         {"asymptote", asymptote}};
    return out;
}

inline CommandResult run_command(const RunConfig& c) {
    if (c.format != "json" && c.format != "csv") throw usage_error("format must be json or csv");
    if (c.precision < 1 || c.precision > 40) throw usage_error("precision must be in 1..40");
    if (c.command == "expand") return cmd_expand(c);
    if (c.command == "cancel-check") return cmd_cancel_check(c);
    if (c.command == "z") return cmd_z(c);
    if (c.command == "imn") return cmd_imn(c);
    if (c.command == "phase-volume") return cmd_phase_volume(c);
    throw usage_error("unknown command '" + c.command + "'");
}

// JSON: the report. CSV: comment lines with the header and config, then the table.
inline std::string render(const CommandResult& r) {
    if (r.report.config.format == "json") return json(r.report).dump(2) + "\n";
    std::ostringstream os;
    os << "# " << r.report.artifact << " " << r.report.version << "\n";
    os << "# config " << json(r.report.config).dump() << "\n";
    os << "# validity " << json(r.report.validity).dump() << "\n";
    for (std::size_t i = 0; i < r.csv_header.size(); ++i) os << (i ? "," : "") << r.csv_header[i];
    os << "\n";
    for (const auto& row : r.csv_rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            const bool quote = row[i].find(',') != std::string::npos;
            os << (i ? "," : "") << (quote ? "\"" + row[i] + "\"" : row[i]);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace ymwk
