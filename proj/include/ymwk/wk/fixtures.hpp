#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "ymwk/wk/recursion.hpp"

namespace ymwk {

// Layout: <root>/wk/<potential>/W<k>.txt, one polynomial in canonical text per file,
// terminated by a single newline.
inline std::filesystem::path fixture_path(const std::filesystem::path& root, const std::string& potential, int k) {
    return root / "wk" / potential / ("W" + std::to_string(k) + ".txt");
}

inline void write_sequence(const WkSequence& seq, const std::filesystem::path& root) {
    std::filesystem::create_directories(root / "wk" / seq.potential.name);
    for (int k = 0; k <= seq.kmax(); ++k) {
        std::ofstream out(fixture_path(root, seq.potential.name, k), std::ios::binary);
        if (!out) throw error("cannot write fixture for W" + std::to_string(k));
        out << to_text(seq.orders[k]) << '\n';
    }
}

inline PhasePoly read_fixture(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw usage_error("cannot open fixture " + file.string());
    std::string line;
    std::getline(in, line);
    return parse_poly<PhaseSpaceAlphabet>(line);
}

inline WkSequence read_sequence(const std::filesystem::path& root, const PotentialSpec& pot, int kmax) {
    WkSequence seq{pot, {}, "fixture"};
    for (int k = 0; k <= kmax; ++k) seq.orders.push_back(read_fixture(fixture_path(root, pot.name, k)));
    return seq;
}

}  // namespace ymwk
