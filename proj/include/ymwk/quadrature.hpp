#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "ymwk/error.hpp"

namespace ymwk {

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_intervals = 1'000'000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
inline constexpr std::array<double, 8> kXgk{0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk{0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg{0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = fc * kWgk[7], gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        kron += kWgk[j] * s;
        if (j % 2 == 1) gauss += kWg[j / 2] * s;
    }
    return {a, b, kron * h, std::fabs((kron - gauss) * h)};
}

}  // namespace detail

// Globally adaptive bisection on the segment with the largest error estimate.
template <class F>
QuadResult integrate_adaptive(F f, double a, double b, const QuadOptions& opt = {}) {
    std::priority_queue<detail::Segment> heap;
    heap.push(detail::gk15(f, a, b));
    double value = heap.top().value, err = heap.top().error;
    int intervals = 1;
    while (err > std::max(opt.abs_tol, opt.rel_tol * std::fabs(value))) {
        if (intervals >= opt.max_intervals) {
            std::ostringstream os;
            os << "quadrature did not reach tolerance: estimate " << value << " +- " << err << " after " << intervals
               << " intervals";
            throw numeric_error(os.str());
        }
        detail::Segment s = heap.top();
        heap.pop();
        const double mid = 0.5 * (s.a + s.b);
        detail::Segment l = detail::gk15(f, s.a, mid), r = detail::gk15(f, mid, s.b);
        value += l.value + r.value - s.value;
        err += l.error + r.error - s.error;
        heap.push(l);
        heap.push(r);
        ++intervals;
        if (!std::isfinite(value)) throw numeric_error("quadrature produced a non-finite value");
    }
    // Re-sum to shed accumulated rounding from the running updates.
    double v = 0, e = 0;
    while (!heap.empty()) {
        v += heap.top().value;
        e += heap.top().error;
        heap.pop();
    }
    return {v, e, intervals};
}

// int_a^inf f via x = a + (1 - s)/s.
template <class F>
QuadResult integrate_to_infinity(F f, double a, const QuadOptions& opt = {}) {
    auto g = [&](double s) {
        const double x = a + (1.0 - s) / s;
        const double v = f(x);
        return v == 0.0 ? 0.0 : v / (s * s);
    };
    return integrate_adaptive(g, 0.0, 1.0, opt);
}

}  // namespace ymwk
