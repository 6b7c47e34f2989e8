#include <gtest/gtest.h>

#include <random>
#include <thread>
#include <vector>

#include "ymwk/exactalg.hpp"

using namespace ymwk;

namespace {

// Bernoulli numbers from sum_{j=0}^{n} C(n+1, j) B_j = 0, independent of the tangent-number table.
std::vector<Rational> bernoulli_by_recurrence(int nmax) {
    std::vector<Rational> b(nmax + 1);
    b[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        Rational s = 0;
        for (int j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * b[j];
        b[n] = -s / Rational(n + 1);
    }
    return b;
}

PhasePoly random_poly(std::mt19937& rng, int terms, int max_exp) {
    std::uniform_int_distribution<int> ex(0, max_exp), num(-9, 9), den(1, 7);
    PhasePoly p;
    for (int k = 0; k < terms; ++k) {
        PhasePoly::Exponents e{};
        for (auto& x : e) x = ex(rng);
        p.add_term(e, GaussRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
    }
    return p;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
    EXPECT_EQ(parse_rational("+5"), Rational(5));
    EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
    EXPECT_EQ(to_string(Rational(12, 4)), "3");
    for (const char* bad : {"", "1/", "/2", "1/-2", "a", "1.5", "1/0"}) EXPECT_THROW(parse_rational(bad), usage_error) << bad;
}

TEST(Rational, Combinatorics) {
    EXPECT_EQ(double_factorial(-1), 1);
    EXPECT_EQ(double_factorial(0), 1);
    EXPECT_EQ(double_factorial(7), 105);
    EXPECT_THROW(double_factorial(-3), usage_error);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_THROW(factorial(-1), usage_error);
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(rational_pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(Bernoulli, MatchesRecurrence) {
    const auto ref = bernoulli_by_recurrence(40);
    for (int n = 0; n <= 40; ++n) EXPECT_EQ(bernoulli(n), ref[n]) << "n = " << n;
}

TEST(Bernoulli, KnownValues) {
    EXPECT_EQ(bernoulli(1), Rational(-1, 2));
    EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
    EXPECT_EQ(bernoulli(13), 0);
    EXPECT_THROW(bernoulli(-2), usage_error);
}

TEST(Bernoulli, ConcurrentReadersAgree) {
    std::vector<std::thread> pool;
    std::vector<Rational> got(8);
    for (int i = 0; i < 8; ++i) pool.emplace_back([&got, i] { got[i] = bernoulli(60 + 2 * i); });
    for (auto& th : pool) th.join();
    const auto ref = bernoulli_by_recurrence(74);
    for (int i = 0; i < 8; ++i) EXPECT_EQ(got[i], ref[60 + 2 * i]);
}

TEST(GaussRational, Arithmetic) {
    const GaussRational a(Rational(1, 2), Rational(3)), b(Rational(-2), Rational(1, 3));
    EXPECT_EQ(a * b, GaussRational(Rational(-2), Rational(-35, 6)));
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(GaussRational::i() * GaussRational::i(), GaussRational(-1));
    EXPECT_EQ(a.conj() * a, GaussRational(a.norm()));
}

TEST(GaussRational, TextRoundTrip) {
    for (const GaussRational z : {GaussRational(Rational(3, 7)), GaussRational(0, Rational(-5, 2)),
                                  GaussRational(Rational(-1, 3), Rational(2)), GaussRational(Rational(4), Rational(-9, 8))})
        EXPECT_EQ(parse_gauss_rational(to_string(z)), z) << to_string(z);
    EXPECT_EQ(to_string(GaussRational(Rational(1), Rational(-2))), "(1-2i)");
    EXPECT_EQ(to_string(GaussRational(0, Rational(3))), "3i");
    EXPECT_THROW(parse_gauss_rational("(1+2)"), usage_error);
}

TEST(MultiPoly, TextRoundTrip) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const PhasePoly p = random_poly(rng, 1 + trial % 9, 4);
        EXPECT_EQ(parse_poly<PhaseSpaceAlphabet>(to_text(p)), p);
    }
    EXPECT_EQ(to_text(PhasePoly()), "0");
    EXPECT_TRUE(parse_poly<PhaseSpaceAlphabet>("0").is_zero());
}

TEST(MultiPoly, ParseErrors) {
    EXPECT_THROW(parse_poly<PhaseSpaceAlphabet>("1 * z^2"), usage_error);
    EXPECT_THROW(parse_poly<PhaseSpaceAlphabet>("1 x^2"), usage_error);
    EXPECT_THROW(parse_poly<PhaseSpaceAlphabet>("1 * x^2 x^1"), usage_error);
    EXPECT_THROW(parse_poly<PhaseSpaceAlphabet>("1 * x^a"), usage_error);
    EXPECT_THROW(PhasePoly::symbol("q"), usage_error);
}

TEST(MultiPoly, LeibnizRule) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const PhasePoly a = random_poly(rng, 5, 3), b = random_poly(rng, 5, 3);
        for (std::size_t v = 0; v < PhasePoly::N; ++v) EXPECT_EQ((a * b).diff(v), a.diff(v) * b + a * b.diff(v));
    }
}

TEST(MultiPoly, AntiderivativeInvertsDerivative) {
    std::mt19937 rng(13);
    const std::size_t t = PhasePoly::index_of("t");
    for (int trial = 0; trial < 30; ++trial) {
        const PhasePoly p = random_poly(rng, 6, 3);
        EXPECT_EQ(poly_int_t(p).diff(t), p);
    }
    EXPECT_THROW(poly_int_t(PhasePoly::symbol("t", -1)), usage_error);
}

TEST(MultiPoly, RingLaws) {
    std::mt19937 rng(17);
    const PhasePoly a = random_poly(rng, 4, 2), b = random_poly(rng, 4, 2), c = random_poly(rng, 4, 2);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
}
