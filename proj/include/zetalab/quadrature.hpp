#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <vector>

#include "zetalab/common.hpp"

namespace zetalab {

namespace detail {

// 15-point Gauss-Kronrod pair (QUADPACK dqk15 abscissae/weights).
inline constexpr std::array<double, 8> kGk15X = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kGk15WK = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> kGk15WG = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

} // namespace detail

template <class T>
struct CellEstimate {
    T integral{};
    double err = 0.0;
};

// One GK15 panel.  T is double or cplx.
template <class T, class F>
CellEstimate<T> gk15_panel(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T resk{};
    T resg{};
    const T fc = f(c);
    resk = detail::kGk15WK[7] * fc;
    resg = detail::kGk15WG[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * detail::kGk15X[j];
        const T f1 = f(c - dx);
        const T f2 = f(c + dx);
        resk += detail::kGk15WK[j] * (f1 + f2);
        if (j % 2 == 1) resg += detail::kGk15WG[j / 2] * (f1 + f2);
    }
    CellEstimate<T> out;
    out.integral = resk * h;
    out.err = std::abs(resk - resg) * std::abs(h);
    return out;
}

struct AdaptiveOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    long max_evals = 10'000'000;           // node budget per call
    double initial_cell = 0.0;             // <=0: single cell over [a,b]
    std::function<double(double)> max_cell_at; // optional oscillation-aware cap
};

template <class T>
struct AdaptiveResult {
    T integral{};
    double err = 0.0;
    long evals = 0;
    std::size_t cells = 0;
};

// Global-refinement adaptive GK15: keep a worst-first heap of panels and
// split until the error target or the node budget is reached.  Deterministic
// (sequential, position tie-break through strict weak ordering on err only is
// fine because panel errors are computed identically run to run).
template <class T, class F>
AdaptiveResult<T> integrate_adaptive(F&& f, double a, double b, const AdaptiveOptions& opt = {}) {
    AdaptiveResult<T> out;
    if (!(b > a)) return out;

    struct Cell {
        double a, b, err;
        T integral;
    };
    auto cmp = [](const Cell& x, const Cell& y) { return x.err < y.err; };
    std::priority_queue<Cell, std::vector<Cell>, decltype(cmp)> heap(cmp);

    std::vector<std::pair<double, double>> seed;
    double step = opt.initial_cell > 0 ? opt.initial_cell : (b - a);
    for (double x = a; x < b;) {
        double w = step;
        if (opt.max_cell_at) w = std::min(w, std::max(1e-12, opt.max_cell_at(x)));
        double x2 = std::min(b, x + w);
        seed.emplace_back(x, x2);
        x = x2;
    }

    long evals = 0;
    double total_err = 0.0;
    T total{};
    for (auto [xa, xb] : seed) {
        auto est = gk15_panel<T>(f, xa, xb);
        evals += 15;
        heap.push(Cell{xa, xb, est.err, est.integral});
        total += est.integral;
        total_err += est.err;
    }

    auto target = [&](void) {
        return std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    };
    while (total_err > target() && !heap.empty()) {
        if (evals + 30 > opt.max_evals)
            throw budget_error("quadrature: node budget exceeded before reaching tolerance");
        Cell worst = heap.top();
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b) continue; // cell at rounding limit
        auto left = gk15_panel<T>(f, worst.a, m);
        auto right = gk15_panel<T>(f, m, worst.b);
        evals += 30;
        total += (left.integral + right.integral) - worst.integral;
        total_err += (left.err + right.err) - worst.err;
        heap.push(Cell{worst.a, m, left.err, left.integral});
        heap.push(Cell{m, worst.b, right.err, right.integral});
    }

    out.integral = total;
    out.err = total_err;
    out.evals = evals;
    out.cells = heap.size();
    return out;
}

// Composite Simpson on a uniform table of f-values with an arbitrary weight
// callable; used by the smoothing kernels over precomputed fine tables.
template <class W>
double simpson_weighted(const std::vector<double>& f, double t0, double dt,
                        std::size_t i0, std::size_t i1, W&& weight) {
    if (i1 <= i0 + 1) return 0.0;
    if ((i1 - i0) % 2 == 1) --i1; // even number of intervals
    NeumaierSum acc;
    for (std::size_t i = i0; i + 2 <= i1; i += 2) {
        const double x0 = t0 + dt * static_cast<double>(i);
        const double g0 = f[i] * weight(x0);
        const double g1 = f[i + 1] * weight(x0 + dt);
        const double g2 = f[i + 2] * weight(x0 + 2 * dt);
        acc.add(dt / 3.0 * (g0 + 4.0 * g1 + g2));
    }
    return acc.value();
}

} // namespace zetalab
