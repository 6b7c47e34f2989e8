#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ymwk/central/params.hpp"

namespace ymwk {

struct RunConfig {
    std::string command;
    double g = 1.0;
    double hbar = 1.0;
    double t = 0.1;
    double Q = 10.0;
    int kmax = 8;
    std::string format = "json";  // json | csv
    int precision = 17;           // significant digits in CSV output
    unsigned long seed = 1;
    std::string out;              // empty: standard output
    std::map<std::string, std::string> options;  // command-specific

    ModelParams params() const { return ModelParams(g, hbar, t, Q); }

    std::string option(const std::string& key, const std::string& fallback) const {
        auto it = options.find(key);
        return it == options.end() ? fallback : it->second;
    }
    double option_double(const std::string& key, double fallback) const {
        auto it = options.find(key);
        if (it == options.end()) return fallback;
        char* end = nullptr;
        const double v = std::strtod(it->second.c_str(), &end);
        if (end == it->second.c_str() || *end != '\0') throw usage_error("option " + key + " is not a number: " + it->second);
        return v;
    }
    int option_int(const std::string& key, int fallback) const {
        const double v = option_double(key, fallback);
        if (v != static_cast<int>(v)) throw usage_error("option " + key + " is not an integer");
        return static_cast<int>(v);
    }
    bool option_flag(const std::string& key) const { return option(key, "false") == "true"; }

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
    return b < e ? std::string(b, e) : std::string();
}

inline double parse_number(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (v.empty() || *end != '\0') throw usage_error("config key " + key + " expects a number, got '" + v + "'");
    return x;
}

}  // namespace detail

// Known keys set the typed fields; anything else lands in options.
inline void set_config_value(RunConfig& c, const std::string& key, const std::string& value) {
    if (key == "g")
        c.g = detail::parse_number(key, value);
    else if (key == "hbar")
        c.hbar = detail::parse_number(key, value);
    else if (key == "t")
        c.t = detail::parse_number(key, value);
    else if (key == "Q")
        c.Q = detail::parse_number(key, value);
    else if (key == "kmax")
        c.kmax = static_cast<int>(detail::parse_number(key, value));
    else if (key == "format")
        c.format = value;
    else if (key == "precision")
        c.precision = static_cast<int>(detail::parse_number(key, value));
    else if (key == "seed")
        c.seed = static_cast<unsigned long>(detail::parse_number(key, value));
    else if (key == "out")
        c.out = value;
    else
        c.options[key] = value;
}

// Either a JSON object or "key = value" lines ('#' starts a comment).
inline void apply_config_text(RunConfig& c, const std::string& text) {
    const std::string body = detail::trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception& e) {
            throw usage_error(std::string("config JSON: ") + e.what());
        }
        for (const auto& [k, v] : j.items()) set_config_value(c, k, v.is_string() ? v.get<std::string>() : v.dump());
        return;
    }
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw usage_error("config line " + std::to_string(lineno) + " lacks '='");
        set_config_value(c, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
    }
}

inline void load_config_file(RunConfig& c, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    apply_config_text(c, ss.str());
}

}  // namespace ymwk
