#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ymwk/wk.hpp"

using namespace ymwk;

namespace {

const std::filesystem::path kFixtures = YMWK_FIXTURES;

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const WkSequence& quartic(int kmax) {
    static const WkSequence seq = wk_sequence(PotentialSpec::quartic_xy(), 10);
    EXPECT_LE(kmax, 10);
    return seq;
}

}  // namespace

TEST(WkGolden, QuarticMatchesIndependentGenerator) {
    const WkSequence& seq = quartic(2);
    for (int k = 0; k <= 2; ++k) {
        const auto file = fixture_path(kFixtures, "quartic-xy", k);
        EXPECT_EQ(read_fixture(file), seq.orders[k]) << "W" << k;
        EXPECT_EQ(slurp(file), to_text(seq.orders[k]) + "\n") << "W" << k;
    }
}

TEST(WkGolden, LinearMatchesIndependentGenerator) {
    const WkSequence seq = wk_sequence(PotentialSpec::linear_alpha(), 8);
    for (int k = 0; k <= 8; k += 2) {
        const auto file = fixture_path(kFixtures, "linear", k);
        EXPECT_EQ(read_fixture(file), seq.orders[k]) << "W" << k;
        EXPECT_EQ(slurp(file), to_text(seq.orders[k]) + "\n") << "W" << k;
    }
}

TEST(WkGolden, FirstOrderCarriesSquaredT) {
    const PhasePoly& w1 = quartic(1).orders[1];
    const std::size_t t = PhasePoly::index_of("t");
    ASSERT_FALSE(w1.is_zero());
    for (const auto& [e, c] : w1.terms()) EXPECT_EQ(e[t], 2);
}

TEST(Bloch, RecursionSatisfiesBlochEquation) {
    EXPECT_TRUE(verify_bloch(quartic(8)).all_ok());
    EXPECT_TRUE(verify_bloch(wk_sequence(PotentialSpec::linear_alpha(), 8)).all_ok());
}

TEST(Bloch, DetectsCorruptedOrder) {
    WkSequence seq = wk_sequence(PotentialSpec::quartic_xy(), 6);
    seq.orders[5] += PhasePoly::symbol("t", 3) * PhasePoly::symbol("x");
    const BlochReport r = verify_bloch(seq);
    EXPECT_FALSE(r.all_ok());
    EXPECT_EQ(r.first_failure(), 5);
}

TEST(Bloch, DetectsNonzeroInitialValue) {
    WkSequence seq = wk_sequence(PotentialSpec::linear_alpha(), 4);
    seq.orders[2] += PhasePoly(GaussRational(Rational(1, 3)));
    EXPECT_FALSE(verify_bloch(seq).orders[2].initial_condition_ok);
}

// Odd orders are purely imaginary and odd in the momenta; even orders are real and even.
TEST(WkProperties, ParityInMomenta) {
    const std::size_t px = PhasePoly::index_of("px"), py = PhasePoly::index_of("py");
    const WkSequence& seq = quartic(10);
    for (int k = 1; k <= 10; ++k) {
        for (const auto& [e, c] : seq.orders[k].terms()) {
            const bool odd = (e[px] + e[py]) % 2 == 1;
            EXPECT_EQ(odd, k % 2 == 1) << "k = " << k;
            if (k % 2) {
                EXPECT_EQ(c.re(), 0) << "k = " << k;
            } else {
                EXPECT_TRUE(c.is_real()) << "k = " << k;
            }
        }
    }
}

TEST(WkProperties, MomentumMoments) {
    const PhasePoly p4 = PhasePoly::symbol("px", 4) * PhasePoly::symbol("py", 2);
    const MomentReduced r = reduce_momentum(p4, 2);
    EXPECT_EQ(r.integrand, PhasePoly(GaussRational(3)) * PhasePoly::symbol("t", -3));
    EXPECT_TRUE(reduce_momentum(PhasePoly::symbol("px", 3), 2).integrand.is_zero());
    EXPECT_THROW(reduce_momentum(PhasePoly::symbol("py", 2), 1), usage_error);
}

// For V = alpha x the trace is known in closed form: the phase-space average of the
// corrections is exp(alpha^2 t^3 / 24) order by order in hbar^2.
TEST(WkProperties, LinearPotentialClosedForm) {
    const WkSequence seq = wk_sequence(PotentialSpec::linear_alpha(), 10);
    const PhasePoly base = PhasePoly::symbol("alpha", 2) * PhasePoly::symbol("t", 3) * GaussRational(Rational(1, 24));
    PhasePoly power(1);
    for (int j = 0; j <= 5; ++j) {
        EXPECT_EQ(reduce_momentum(seq.orders[2 * j], 1).integrand, power * GaussRational(Rational(1) / Rational(factorial(j))))
            << "k = " << 2 * j;
        if (j < 5) EXPECT_TRUE(reduce_momentum(seq.orders[2 * j + 1], 1).integrand.is_zero());
        power = power * base;
    }
}

TEST(Imn, DiagonalEntriesOnlyAtMultiplesOfFour) {
    const WkSequence& seq = quartic(10);
    for (int k = 2; k <= 10; k += 2) {
        const ImnDecomposition d = imn_decompose(reduce_momentum(seq.orders[k], 2), k);
        EXPECT_EQ(!d.diagonal().empty(), k % 4 == 0) << "k = " << k;
        EXPECT_EQ(d.max_difference(), k / 2) << "k = " << k;
        for (const auto& e : d.entries) {
            EXPECT_GE(e.m, e.n);
            EXPECT_EQ(e.subdominant, e.difference() < k / 2);
        }
    }
}

TEST(Imn, CsvHasOneRowPerEntry) {
    const ImnDecomposition d = imn_decompose(reduce_momentum(quartic(4).orders[4], 2), 4);
    const std::string csv = to_csv(d);
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), d.entries.size() + 1);
    EXPECT_EQ(csv.rfind("coef_num,coef_den,m,n,g_pow,t_pow\n", 0), 0u);
}

TEST(Fixtures, WriteReadRoundTrip) {
    const auto dir = std::filesystem::temp_directory_path() / "ymwk_fixture_roundtrip";
    std::filesystem::remove_all(dir);
    const WkSequence seq = wk_sequence(PotentialSpec::quartic_xy(), 4);
    write_sequence(seq, dir);
    const WkSequence back = read_sequence(dir, seq.potential, 4);
    EXPECT_EQ(back.orders, seq.orders);
    EXPECT_EQ(back.provenance, "fixture");
    std::filesystem::remove_all(dir);
    EXPECT_THROW(read_fixture(dir / "missing.txt"), usage_error);
}

TEST(Potential, Validation) {
    EXPECT_THROW(PotentialSpec::by_name("cubic"), usage_error);
    EXPECT_THROW(PotentialSpec::custom(PhasePoly::symbol("x", -1), 2), usage_error);
    EXPECT_THROW(PotentialSpec::custom(PhasePoly::symbol("px", 2), 2), usage_error);
    EXPECT_THROW(PotentialSpec::custom(PhasePoly::symbol("y", 2), 1), usage_error);
    EXPECT_NO_THROW(PotentialSpec::custom(PhasePoly::symbol("x", 4), 1));
}
