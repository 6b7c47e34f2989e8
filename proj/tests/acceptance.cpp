// Acceptance run: one PASS/FAIL line per criterion. Tolerances are fixed here.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "ymwk/cli/commands.hpp"

using namespace ymwk;

namespace {

constexpr double kZeta3 = 1.2020569031595942854;

// Criterion 3 compares against a printed value that the exact result misses by 1.7e-3 relative.
const std::set<int> kKnownDeviations{3};

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string num(double v, int digits = 6) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

PhasePoly sym(const char* s, int p = 1) { return PhasePoly::symbol(s, p); }
PhasePoly rat(long p, long q = 1) { return PhasePoly(GaussRational(Rational(p, q))); }

// ---- 1: WK fixtures as printed closed forms ----

Outcome wk_fixtures() {
    const PhasePoly V = PotentialSpec::quartic_xy().V;
    const PhasePoly t = sym("t"), px = sym("px"), py = sym("py"), i = PhasePoly(GaussRational(0, 1));
    const PhasePoly Vx = V.diff("x"), Vy = V.diff("y");
    const PhasePoly pgrad = px * Vx + py * Vy;
    const PhasePoly grad2 = Vx * Vx + Vy * Vy, lap = V.diff("x").diff("x") + V.diff("y").diff("y");
    const PhasePoly hess = px * px * Vx.diff("x") + rat(2) * px * py * Vx.diff("y") + py * py * Vy.diff("y");

    const PhasePoly w1_printed = rat(-1, 2) * i * t * pgrad;
    const PhasePoly w1_corrected = rat(-1, 2) * i * t * t * pgrad;
    const PhasePoly w2 = rat(1, 2) * t * t *
                         (rat(-1, 2) * lap + rat(1, 3) * t * grad2 + rat(1, 3) * t * hess - rat(1, 4) * t * t * pgrad * pgrad);

    const WkSequence q = wk_sequence(PotentialSpec::quartic_xy(), 2);
    const bool w1_ok = q.orders[1] == w1_corrected, w1_lit = q.orders[1] == w1_printed, w2_ok = q.orders[2] == w2;

    const PhasePoly a = sym("alpha"), p2t = px * px * t;
    auto pw = [](const PhasePoly& x, int n) {
        PhasePoly r(1);
        for (int k = 0; k < n; ++k) r = r * x;
        return r;
    };
    const PhasePoly at3 = pw(a, 2) * pw(t, 3);
    std::vector<PhasePoly> linear{
        rat(1, 24) * at3 * (rat(4) - rat(3) * p2t),
        rat(1, 9 * 128) * pw(at3, 2) * (rat(16) - rat(24) * p2t + rat(3) * pw(p2t, 2)),
        rat(1, 1024L * 27 * 15) * pw(at3, 3) * (rat(320) - rat(720) * p2t + rat(180) * pw(p2t, 2) - rat(9) * pw(p2t, 3)),
        rat(1, 32768L * 81 * 105) * pw(at3, 4) *
            (rat(8960) - rat(26880) * p2t + rat(10080) * pw(p2t, 2) - rat(1008) * pw(p2t, 3) + rat(27) * pw(p2t, 4))};
    const WkSequence l = wk_sequence(PotentialSpec::linear_alpha(), 8);
    int linear_ok = 0;
    for (int j = 0; j < 4; ++j) linear_ok += l.orders[2 * j + 2] == linear[j];

    Outcome o;
    o.pass = w1_ok && w2_ok && linear_ok == 4;
    o.detail = std::string("x^2 y^2: W1 ") + (w1_ok ? "exact" : "mismatch") + " with t^2 (printed t^1 form " +
               (w1_lit ? "matches" : "does not match") + "), W2 " + (w2_ok ? "exact" : "mismatch") +
               "; linear W2..W8: " + std::to_string(linear_ok) + "/4 exact";
    return o;
}

// ---- 2: cancellation with printed coefficients ----

Outcome cancellation() {
    const ModelParams p(1, 1, 0.1, 10);
    const Rational printed[] = {Rational(-1, 12), Rational(7, 5760), Rational(-31, 1451520), Rational(127, 309657600)};
    bool ok = true;
    std::string d;
    for (int j = 0; j < 4; ++j) {
        const int k = 2 * j + 2;
        const Rational sq = zk_square(k, p).coefficient, ch = z_channels_leading(k, p).coefficient;
        const bool row = sq + ch == 0 && sq == printed[j] && ch == -printed[j];
        ok = ok && row;
        d += (j ? ", " : "") + std::string("k=") + std::to_string(k) + " " + to_string(sq) + " + " + to_string(ch) +
             (row ? "" : " (mismatch)");
    }
    return {ok, d};
}

// ---- 3: free-channel constant ----

Outcome free_channel() {
    const double xi0 = 1e-6;
    const double hgtq = 2 * xi0;
    const double quad = quad_z2_channel(xi0).value;
    const double expected = hgtq * hgtq / 12 - 21 * kZeta3;
    const FreeChannelResult exact = z2_free_channel(ModelParams(1, 1, 2 * xi0, 1));
    const bool symbolic = exact.constant.rational == 0 && exact.constant.coefficient(3) == -21 &&
                          exact.hgtq2_coefficient == Rational(1, 12);
    const bool a_ok = std::fabs(quad - expected) <= 1e-4 && symbolic;
    const double combined = quad - hgtq * hgtq / 12;  // square term is -(hbar g t Q)^2 / 12
    const double rel = std::fabs(combined - (-25.2)) / 25.2;
    const bool b_ok = rel <= 1e-3;
    Outcome o;
    o.pass = a_ok && b_ok;
    o.detail = "channel integral " + num(quad, 12) + " vs " + num(expected, 12) + " (|diff| " +
               num(std::fabs(quad - expected), 2) + " <= 1e-4: " + (a_ok ? "yes" : "no") + ", constant " +
               exact.constant.str() + "); combined " + num(combined, 9) + " vs printed -25.2: rel " + num(rel, 3) +
               " > 1e-3 (the spec decimal -25.24045 is also not -21 zeta(3) = -25.2431950)";
    if (b_ok) o.detail = "channel integral and combined value within tolerance";
    return o;
}

// ---- 4: I_mn oracle triangle ----

Outcome imn_triangle() {
    const ModelParams p(1, 1, 1, 10);
    const QuadOptions opt{1e-12, 1e-12, 1'000'000};
    double worst_c = 0, worst_u = 0, worst_d = 0;
    for (auto [m, n] : {std::pair{1, 0}, {2, 1}, {2, 0}, {3, 1}}) {
        const double q = quad_imn(m, n, p, opt).value;
        worst_c = std::max(worst_c, std::fabs(imn_leading(m, n, p, Correction::exponent) - q) / q);
        worst_u = std::max(worst_u, std::fabs(imn_leading(m, n, p) - q) / q);
    }
    for (int m = 0; m <= 3; ++m) {
        const double q = quad_imn(m, m, p, opt).value;
        worst_d = std::max(worst_d, std::fabs(imm_log(m, p) - q) / q);
    }
    const bool ok = worst_c <= 1e-6 && worst_u <= 2e-3 && worst_d <= 1e-3;
    return {ok, "corrected " + num(worst_c, 2) + " <= 1e-6, uncorrected " + num(worst_u, 2) + " <= 2e-3, I00..I33 " +
                    num(worst_d, 2) + " <= 1e-3 (max relative deviation from quadrature)"};
}

// ---- 5: a-coefficients ----

Outcome a_coefficients() {
    const auto a = extract_a_coefficients(1);
    const std::vector<Rational> printed{Rational(-1, 60), Rational(1, 16), Rational(-17, 720), Rational(1, 576)};
    std::string d;
    for (std::size_t m = 0; m < a.size(); ++m) d += (m ? ", " : "") + to_string(a[m]);
    return {a == printed, "(" + d + "); log residual " + to_string(central_log_residual(a))};
}

// ---- 6: asymptotic series ----

Outcome asymptotic_series() {
    const double l2 = 1e-3;
    const int nopt = static_cast<int>(24 * M_PI * M_PI / l2);
    const AsymptoticSeries s = channel_q_independent(static_cast<int>(nopt * 1.05) + 20, l2);
    bool shape = s.minimum_found && s.optimal_index > 1;
    if (shape) {
        const auto& T = s.terms;
        const int k = s.optimal_index - 1;  // index of the smallest term
        for (int j = 1; j <= k; ++j) shape = shape && T[j].log_abs < T[j - 1].log_abs;
        for (std::size_t j = k + 1; j < T.size(); ++j) shape = shape && T[j].log_abs > T[j - 1].log_abs;
    }
    bool forms = true;
    for (int n = 1; n <= 6; ++n) {
        const Rational c = channel_q_coefficient_closed(n);
        forms = forms && c == channel_q_coefficient_double_factorial(n) && c == channel_q_coefficient_derivative(n);
    }
    double ratio_dev = 0;
    for (int n = 12; n <= 40; ++n) {
        // |B_{2n}| / (2 (2n)! / (2 pi)^{2n}) in the log domain
        const double lr = std::log(std::fabs(to_double(bernoulli(2 * n)))) -
                          (std::log(2.0) + std::lgamma(2.0 * n + 1) - 2.0 * n * std::log(2 * M_PI));
        ratio_dev = std::max(ratio_dev, std::fabs(std::exp(lr) - 1));
    }
    const bool ok = shape && forms && ratio_dev <= 1e-2;
    return {ok, "lambda^2 = 1e-3: optimal index " + std::to_string(s.optimal_index) + " (estimate " +
                    std::to_string(nopt) + "), magnitudes " + (shape ? "fall then rise" : "not unimodal") +
                    ", first omitted ~ exp(" + num(static_cast<double>(s.first_omitted_log), 8) + "); n <= 6 forms " +
                    (forms ? "equal" : "differ") + "; Bernoulli ratio max |r - 1| for n >= 12: " + num(ratio_dev, 2)};
}

// ---- 7: Airy oracle ----

Outcome airy_oracle() {
    const double hbar = 1, g = 1, Q = 2;
    double worst = 0, min_gap = 1e300;
    for (int mode = 0; mode <= 1; ++mode) {
        const double slope = (mode + 0.5) * hbar * g;
        const auto exact = airy_levels(mode, 5, hbar, g, Q);
        const Spectrum dvr = eigen_spectrum(linear_wall_dvr(slope, hbar, Q, 0.05, 500), 5);
        const auto fd = linear_wall_levels_fd(slope, 5, hbar, Q);
        for (int k = 0; k < 5; ++k) {
            worst = std::max(worst, std::fabs(dvr.eigenvalues[k] - exact[k]) / exact[k]);
            worst = std::max(worst, std::fabs(fd[k] - exact[k]) / exact[k]);
            if (k) min_gap = std::min(min_gap, dvr.eigenvalues[k] - dvr.eigenvalues[k - 1]);
        }
    }
    const bool ok = worst <= 1e-6 && min_gap > 0;
    return {ok, "modes 0,1, levels 1..5: max relative deviation " + num(worst, 2) +
                    " <= 1e-6 (sinc grid and finite differences), smallest spacing " + num(min_gap, 4)};
}

// ---- 8: spectral vs semiclassical ----

Outcome spectral_vs_tf() {
    RunConfig c;
    c.command = "z";
    c.t = std::cbrt(1e-2);
    c.options["mode"] = "compare";
    const CommandResult r = run_command(c);
    const json& res = r.report.result;
    const json& spec = res["spectral"];
    std::string d = "t = " + num(c.t, 6) + ", lambda^2 = 1e-2: Z_spectral " + num(res["spectral_K_units"].get<double>(), 8) +
                    " K, basis agreement " + num(spec["basis_agreement"].get<double>(), 2) + " <= 1e-3, tail " +
                    num(spec["tail_fraction"].get<double>(), 2) + " < 1e-2";
    for (const auto& row : res["rows"])
        d += ", " + row["method"].get<std::string>() + " deviation " + num(row["deviation"].get<double>(), 2);
    return {r.exit_code == kExitOk && res["all_within_tolerance"].get<bool>(), d + " (tolerance 0.10)"};
}

// ---- 9: Q independence ----

Outcome q_independence() {
    double dom[2], resid[2], scale[2];
    bool exact = true;
    const double Qs[2] = {10.0, 15.0};
    for (int j = 0; j < 2; ++j) {
        RunConfig c;
        c.command = "z";
        c.Q = Qs[j];
        c.options["mode"] = "leading";
        const json r = run_command(c).report.result;
        for (const auto& q : r["q_dependence_exact"]) exact = exact && q == "0";
        dom[j] = r["dominant_K_units"].get<double>();
        resid[j] = std::fabs(r["full_minus_tf"].get<double>());
        scale[j] = r["residual_scale"].get<double>();
    }
    const bool ok = exact && std::fabs(dom[0] - dom[1]) <= 1e-12 * std::fabs(dom[0]) && resid[0] < scale[0] &&
                    resid[1] < scale[1];
    return {ok, std::string("Q-dependent coefficients ") + (exact ? "all exactly 0" : "nonzero") + ", dominant " +
                    num(dom[0], 15) + " vs " + num(dom[1], 15) + ", residuals " + num(resid[0], 2) + " < " +
                    num(scale[0], 2) + " and " + num(resid[1], 2) + " < " + num(scale[1], 2)};
}

// ---- 10: Euler resummation ----

Outcome euler_resummation() {
    bool ok = true, printed_ok = true;
    std::string d;
    for (int m : {1, 5, 10, 20}) {
        const EulerSum e = odd_harmonic_euler(m, EulerForm::corrected);
        const WideFloat exact = to_float<WideFloat>(odd_harmonic(m));
        const WideFloat err = abs(e.value - exact);
        ok = ok && err <= e.first_omitted;
        const EulerSum pe = odd_harmonic_euler(m, EulerForm::printed);
        printed_ok = printed_ok && abs(pe.value - exact) <= pe.first_omitted;
        d += (d.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) + " err " +
             num(static_cast<double>(err), 2) + " <= " + num(static_cast<double>(e.first_omitted), 2);
    }
    return {ok, d + " (form with ln 4m and 1/k; the printed ln 2m form " +
                    (printed_ok ? "also holds" : "misses by about ln 2 / 2") + ")"};
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
        {1, wk_fixtures},      {2, cancellation},   {3, free_channel},    {4, imn_triangle},
        {5, a_coefficients},   {6, asymptotic_series}, {7, airy_oracle},  {8, spectral_vs_tf},
        {9, q_independence},   {10, euler_resummation}};
    int unexpected = 0;
    for (const auto& [id, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool known = !o.pass && kKnownDeviations.count(id);
        if (!o.pass && !known) ++unexpected;
        std::printf("criterion %2d %s%s [%.1fs] %s\n", id, o.pass ? "PASS" : "FAIL", known ? " (known deviation)" : "",
                    secs, o.detail.c_str());
        std::fflush(stdout);
    }
    return unexpected == 0 ? 0 : 1;
}
