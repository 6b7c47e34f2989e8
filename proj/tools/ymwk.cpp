#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "ymwk/cli/commands.hpp"

namespace {

struct Flags {
    std::string config;
    std::optional<double> g, hbar, t, Q;
    std::optional<int> kmax, precision;
    std::optional<std::string> format, out;
    std::optional<unsigned long> seed;
    std::map<std::string, std::string> options;
};

void add_common(CLI::App* app, Flags& f) {
    app->add_option("--config", f.config, "config file (key = value lines or a JSON object)");
    app->add_option("--g", f.g, "coupling g");
    app->add_option("--hbar", f.hbar, "Planck constant");
    app->add_option("--t", f.t, "inverse temperature t");
    app->add_option("--Q", f.Q, "separation boundary Q");
    app->add_option("--kmax", f.kmax, "highest WK order");
    app->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--precision", f.precision, "significant digits in CSV output");
    app->add_option("--seed", f.seed, "Monte-Carlo seed");
    app->add_option("--out", f.out, "output file (expand: fixture directory)");
}

void add_string(CLI::App* app, Flags& f, const std::string& name, const std::string& help) {
    app->add_option_function<std::string>(
        "--" + name, [&f, name](const std::string& v) { f.options[name] = v; }, help);
}

void add_flag(CLI::App* app, Flags& f, const std::string& name, const std::string& help) {
    app->add_flag_function(
        "--" + name, [&f, name](std::int64_t) { f.options[name] = "true"; }, help);
}

ymwk::RunConfig resolve(const std::string& command, const Flags& f) {
    ymwk::RunConfig c;
    c.command = command;
    if (!f.config.empty()) ymwk::load_config_file(c, f.config);
    if (f.g) c.g = *f.g;
    if (f.hbar) c.hbar = *f.hbar;
    if (f.t) c.t = *f.t;
    if (f.Q) c.Q = *f.Q;
    if (f.kmax) c.kmax = *f.kmax;
    if (f.precision) c.precision = *f.precision;
    if (f.format) c.format = *f.format;
    if (f.out) c.out = *f.out;
    if (f.seed) c.seed = *f.seed;
    for (const auto& [k, v] : f.options) c.options[k] = v;
    c.command = command;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wigner-Kirkwood heat-kernel pipeline for the x^2 y^2 potential"};
    app.require_subcommand(1);
    Flags f;

    auto* expand = app.add_subcommand("expand", "WK sequence, I_mn decomposition and Bloch check");
    add_common(expand, f);
    add_string(expand, f, "potential", "quartic-xy or linear");
    add_string(expand, f, "kmax-ceiling", "largest accepted kmax (default 10)");

    auto* cancel = app.add_subcommand("cancel-check", "exact square + channel sums per order");
    add_common(cancel, f);
    add_flag(cancel, f, "exploratory", "allow kmax = 10, reported only");
    add_string(cancel, f, "channel-model", "adiabatic or free");

    auto* z = app.add_subcommand("z", "partition function");
    add_common(z, f);
    add_string(z, f, "mode", "tf, leading, with-asymptotic, spectral or compare");
    for (const char* name : {"e-max", "spacing", "size", "spacing-fine", "size-fine", "v-cut", "kappa", "bases", "tolerance"})
        add_string(z, f, name, "spectral oracle setting");

    auto* imn = app.add_subcommand("imn", "closed form, corrected form, quadrature and Monte-Carlo for I_mn");
    add_common(imn, f);
    add_string(imn, f, "m", "first index");
    add_string(imn, f, "n", "second index");
    add_string(imn, f, "samples", "Monte-Carlo samples");

    auto* pv = app.add_subcommand("phase-volume", "classical phase volume on doubling the box");
    add_common(pv, f);
    add_string(pv, f, "E", "energy");
    add_string(pv, f, "L", "initial box half-width");
    add_string(pv, f, "doublings", "number of doublings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ymwk::kExitRegime;
    }

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        const ymwk::RunConfig config = resolve(command, f);
        const ymwk::CommandResult result = ymwk::run_command(config);
        const std::string text = ymwk::render(result);
        if (!config.out.empty() && command != "expand") {
            std::ofstream file(config.out);
            if (!file) throw ymwk::usage_error("cannot write " + config.out);
            file << text;
        } else {
            std::cout << text;
        }
        return result.exit_code;
    } catch (const ymwk::regime_error& e) {
        std::cerr << "regime violation: " << e.what() << "\n";
        return ymwk::kExitRegime;
    } catch (const ymwk::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return ymwk::kExitRegime;
    } catch (const ymwk::numeric_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return ymwk::kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return ymwk::kExitNumeric;
    }
}
