#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/cumulative.hpp"
#include "zetalab/grid.hpp"
#include "zetalab/mellin.hpp"
#include "zetalab/mollifier.hpp"
#include "zetalab/polynomial.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

// weight cut at 1e-16: u ranges over +- G sqrt(log 1e16)
inline double gaussian_truncation(double G) { return G * std::sqrt(std::log(1e16)); }

// ---------------------------------------------------------------------------
// uniform fine table of |zeta(1/2+it)|^{2k}; the raw samples go through the
// grid cache, the powers are taken here

struct FineTable {
    int k = 1;
    double dt = 0.0125;
    double t_max = 0.0;
    std::vector<double> f;
    std::vector<double> prefix; // trapezoid antiderivative of the interpolant

    // linear interpolation with even reflection through t = 0
    [[nodiscard]] double at(double t) const {
        t = std::abs(t);
        require(t <= t_max + 1e-9, "FineTable: t inside table required");
        const double u = std::min(t / dt, static_cast<double>(f.size() - 1) - 1e-12);
        const auto i = static_cast<std::size_t>(u);
        const double w = u - static_cast<double>(i);
        return f[i] * (1.0 - w) + f[i + 1] * w;
    }

    // exact antiderivative of the piecewise-linear interpolant, extended as an
    // odd function through 0 (f itself is even)
    [[nodiscard]] double antiderivative(double t) const {
        const double sign = t < 0.0 ? -1.0 : 1.0;
        const double a = std::abs(t);
        require(a <= t_max + 1e-9, "FineTable: t inside table required");
        const double u = std::min(a / dt, static_cast<double>(f.size() - 1) - 1e-12);
        const auto i = static_cast<std::size_t>(u);
        const double w = (u - static_cast<double>(i)) * dt;
        const double slope = (f[i + 1] - f[i]) / dt;
        return sign * (prefix[i] + f[i] * w + 0.5 * slope * w * w);
    }
};

inline FineTable build_fine_table(int k, double t_max, const PrecisionPolicy& policy,
                                  const std::filesystem::path& cache_dir,
                                  unsigned threads = default_thread_count(),
                                  double dt = 0.0125) {
    FineTable ft;
    ft.k = k;
    ft.dt = dt;
    const auto grid = build_grid(0.0, t_max, dt, policy, cache_dir, threads);
    ft.t_max = grid.t1;
    ft.f.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) ft.f[i] = grid.samples[i].abs_pow2k(k);
    ft.prefix.resize(ft.f.size());
    NeumaierSum acc;
    ft.prefix[0] = 0.0;
    for (std::size_t i = 0; i + 1 < ft.f.size(); ++i) {
        acc.add(0.5 * dt * (ft.f[i] + ft.f[i + 1]));
        ft.prefix[i + 1] = acc.value();
    }
    return ft;
}

namespace detail {

// int f(t) e^{-((t-x)/G)^2} dt over one cell with f linear: exact erf moments
inline double gauss_cell(double a, double b, double fa, double fb, double x, double G) {
    const double ua = (a - x) / G;
    const double ub = (b - x) / G;
    const double slope = (fb - fa) / (b - a);
    const double alpha = fa + slope * (x - a); // f(x + G u) = alpha + beta u
    const double beta = slope * G;
    const double erf_part = 0.5 * kSqrtPi * (std::erf(ub) - std::erf(ua));
    const double exp_part = 0.5 * (std::exp(-ua * ua) - std::exp(-ub * ub));
    return G * (alpha * erf_part + beta * exp_part);
}

// (1/(sqrt(pi) G)) int f(t) e^{-((t-x)/G)^2} dt over [x-uc, x+uc], f from the
// table with even reflection.  Cell edges are the multiples of dt on either
// side of zero, so |t| is linear within every cell (the kink at 0 is an edge).
inline double gauss_average(const FineTable& ft, double x, double G) {
    const double uc = gaussian_truncation(G);
    const double lo = x - uc;
    const double hi = x + uc;
    require(hi <= ft.t_max + 1e-9, "gaussian smoothing: table too short");

    if (2.0 * uc / ft.dt > 4096.0) {
        // wide windows: integrate by parts against the antiderivative so the
        // cost tracks the smoothing scale, not the table mesh
        auto w = [&](double t) {
            const double u = (t - x) / G;
            return std::exp(-u * u);
        };
        auto wprime_S = [&](double t) {
            const double u = (t - x) / G;
            return (-2.0 * u / G) * std::exp(-u * u) * ft.antiderivative(t);
        };
        AdaptiveOptions opt;
        opt.abs_tol = 1e-12;
        opt.rel_tol = 1e-10;
        opt.initial_cell = G / 4.0;
        const double boundary = w(hi) * ft.antiderivative(hi) - w(lo) * ft.antiderivative(lo);
        const double bulk = integrate_adaptive<double>(wprime_S, lo, hi, opt).integral;
        return (boundary - bulk) / (kSqrtPi * G);
    }

    NeumaierSum acc;
    double t = lo;
    while (t < hi - 1e-15) {
        const double m = std::floor(t / ft.dt + 1e-9);
        double t2 = std::min(hi, (m + 1.0) * ft.dt);
        if (t2 <= t) t2 = std::min(hi, t + ft.dt);
        acc.add(gauss_cell(t, t2, ft.at(t), ft.at(t2), x, G));
        t = t2;
    }
    return acc.value() / (kSqrtPi * G);
}

} // namespace detail

struct SmoothedMoment {
    double x = 0.0;
    double G = 0.0;
    int k = 0;
    double value = 0.0;
    double truncation_u = 0.0;
    double tail_budget = 0.0; // discarded gaussian mass plus interpolation scale
};

// J_k(x; G), the gaussian-weighted local average of |zeta|^{2k}
inline SmoothedMoment smoothed_moment(double x, double G, int k, const FineTable& ft) {
    require(ft.k == k, "smoothed_moment: table power mismatch");
    require(G > 0.0, "smoothed_moment: G > 0 required");
    const double uc = gaussian_truncation(G);
    require(x - uc >= 0.0, "smoothed_moment: x - truncation_u >= 0 required");
    SmoothedMoment out;
    out.x = x;
    out.G = G;
    out.k = k;
    out.truncation_u = uc;
    out.value = detail::gauss_average(ft, x, G);
    out.tail_budget = 1e-16 * std::abs(out.value) + 1e-16;
    return out;
}

// the same average extended through t = 0 by the even symmetry of |zeta| on
// the critical line; internal path for the transforms that start at x = 1
inline double smoothed_moment_reflected(double x, double G, const FineTable& ft) {
    require(G > 0.0, "smoothed_moment: G > 0 required");
    return detail::gauss_average(ft, x, G);
}

// ---------------------------------------------------------------------------
// decomposition check: J_2(x;G) = smoothed Q_4 + (2/(sqrt(pi) G^3)) int u E_2(x+u) w(u) du

struct DecompositionCheck {
    double j_value = 0.0;
    double lhs_minus_q4 = 0.0;     // J_2 - Q_4(log x)
    double derivative_term = 0.0;  // the weighted E_2 integral
    double smoothed_q4 = 0.0;
    double residual = 0.0;         // J - smoothed Q_4 - derivative term
};

// weighted derivative term with an arbitrary error profile (synthetic tests)
inline double decomposition_derivative_term(double x, double G,
                                            const std::function<double(double)>& E) {
    const double uc = gaussian_truncation(G);
    AdaptiveOptions opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-9;
    opt.initial_cell = G / 8.0;
    const double integral = integrate_adaptive<double>(
                                [&](double u) {
                                    return u * E(x + u) * std::exp(-(u / G) * (u / G));
                                },
                                -uc, uc, opt)
                                .integral;
    return 2.0 * integral / (kSqrtPi * G * G * G);
}

inline DecompositionCheck smoothed_decomposition_check(double x, double xi,
                                                       const MomentPolynomial& poly4,
                                                       const CumulativeMoment& table2,
                                                       const FineTable& fine2) {
    require(x >= 100.0, "smoothed_decomposition_check: x >= 100 required");
    require(xi >= 1.0 / 3.0 && xi <= 1.0, "smoothed_decomposition_check: 1/3 <= xi <= 1 required");
    require(poly4.k == 2, "smoothed_decomposition_check: k = 2 polynomial required");
    const double G = std::pow(x, xi);
    const double uc = gaussian_truncation(G);

    DecompositionCheck out;
    out.j_value = smoothed_moment(x, G, 2, fine2).value;
    out.lhs_minus_q4 = out.j_value - poly4.eval_q(std::log(x));

    AdaptiveOptions opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-9;
    opt.initial_cell = G / 8.0;
    out.smoothed_q4 = integrate_adaptive<double>(
                          [&](double u) {
                              return poly4.eval_q(std::log(x + u)) *
                                     std::exp(-(u / G) * (u / G));
                          },
                          -uc, uc, opt)
                          .integral /
                      (kSqrtPi * G);
    out.derivative_term = decomposition_derivative_term(
        x, G, [&](double t) { return table2.value(t) - poly4.main_term(t); });
    out.residual = out.j_value - out.smoothed_q4 - out.derivative_term;
    return out;
}

// ---------------------------------------------------------------------------
// J_2(x; x^xi) on a uniform x-grid with cubic interpolation; feeds the
// smoothed transform and the growth scans

struct JTable {
    double xi = 0.5;
    double dx = 0.5;
    double x0 = 0.5;    // first node (one pad node below x = 1)
    double x_max = 0.0; // last interpolable point
    std::vector<double> J;

    [[nodiscard]] double at(double x) const {
        require(x >= 1.0 - 1e-9 && x <= x_max + 1e-9, "JTable: x inside table required");
        const double u = (x - x0) / dx;
        auto i = static_cast<std::size_t>(std::clamp(u, 1.0, static_cast<double>(J.size() - 3)));
        i = std::min<std::size_t>(std::max<std::size_t>(i, 1), J.size() - 3);
        const double w = u - static_cast<double>(i);
        // Catmull-Rom on the proper segment [p1, p2]
        const double p0 = J[i - 1], p1 = J[i], p2 = J[i + 1], p3 = J[i + 2];
        return p1 + 0.5 * w * (p2 - p0 +
               w * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 + w * (3.0 * (p1 - p2) + p3 - p0)));
    }
};

inline JTable build_j_table(double xi, double x_max, const FineTable& fine2,
                            unsigned threads = default_thread_count(), double dx = 0.5) {
    require(fine2.k == 2, "build_j_table: fourth-power fine table required");
    require(fine2.t_max >= x_max + dx + gaussian_truncation(std::pow(x_max + dx, xi)),
            "build_j_table: fine table too short for the top smoothing window");
    JTable jt;
    jt.xi = xi;
    jt.dx = dx;
    jt.x0 = 1.0 - dx;
    // one pad node below 1 and one above x_max so every query sits on a full
    // interpolation segment
    const auto n = static_cast<std::size_t>(std::ceil((x_max - 1.0) / dx)) + 3;
    jt.x_max = jt.x0 + dx * static_cast<double>(n - 2);
    jt.J.resize(n);
    constexpr std::size_t kChunk = 128;
    parallel_chunks((n + kChunk - 1) / kChunk, threads, [&](std::size_t ci) {
        const std::size_t lo = ci * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        for (std::size_t i = lo; i < hi; ++i) {
            const double x = jt.x0 + dx * static_cast<double>(i);
            jt.J[i] = smoothed_moment_reflected(x, std::pow(std::abs(x), xi), fine2);
        }
    });
    return jt;
}

// Z_xi(s) = int_1^X J_2(x; x^xi) x^{-s} dx for Re s > 1, with the smoothed
// integrand evaluated directly (no interpolation; the scans use the J table)
struct ZXiValue {
    cplx s;
    cplx value;
    double truncation = 0.0;
    double tail_bound = 0.0;
    double quad_error = 0.0;
};

inline ZXiValue z_xi(cplx s, double xi, double X, const FineTable& fine2,
                     double tol = 1e-8, long max_evals = 2'000'000) {
    require(s.real() > 1.0, "z_xi: Re s > 1 required for direct evaluation");
    require(xi >= 1.0 / 3.0 && xi <= 1.0, "z_xi: 1/3 <= xi <= 1 required");
    require(X >= 10.0, "z_xi: X >= 10 required");
    require(fine2.t_max >= X + gaussian_truncation(std::pow(X, xi)),
            "z_xi: fine table too short for the top smoothing window");
    AdaptiveOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = tol;
    opt.max_evals = max_evals;
    opt.initial_cell = 0.5;
    const double w = std::abs(s.imag()) + 1e-9;
    opt.max_cell_at = [w, xi](double x) {
        // J varies on the smoothing scale x^xi; also respect the x^{-it} phase
        return std::min(std::max(0.5, 0.5 * std::pow(x, xi)), 2.0 * x / w);
    };
    auto res = integrate_adaptive<cplx>(
        [&](double x) {
            return smoothed_moment_reflected(x, std::pow(x, xi), fine2) *
                   std::exp(-s * std::log(x));
        },
        1.0, X, opt);
    ZXiValue out;
    out.s = s;
    out.value = res.integral;
    out.truncation = X;
    out.tail_bound = detail::direct_tail_bound(2, X, s.real());
    out.quad_error = res.err;
    return out;
}

// ---------------------------------------------------------------------------
// growth scan of |Z_xi| on a vertical line via the pole part plus dyadic
// smooth pieces of the fluctuation D = J_2 - Q_4(log): the desk realization
// of the transform for 1/2 < sigma <= 1

struct Theorem3Point {
    double t = 0.0;
    cplx value;
    double x_max = 0.0;
    double top_piece = 0.0; // magnitude of the outermost dyadic piece
};

struct Theorem3Scan {
    double sigma = 0.0;
    double xi = 0.0;
    std::vector<Theorem3Point> points;
    double exponent = 0.0;
    double bound = 0.0; // 1 - sigma + 0.3
    bool violated = false;
    bool degenerate = false;
};

inline cplx z_xi_line_value(cplx s, const JTable& jt, const MomentPolynomial& poly4,
                            double x_cap, double* top_piece = nullptr) {
    const auto q = poly4.q_coeffs();
    cplx val(0.0, 0.0);
    double fact = 1.0;
    const cplx w = 1.0 / (s - 1.0);
    cplx wp = w;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (j > 0) fact *= static_cast<double>(j);
        val += q[j] * fact * wp;
        wp *= w;
    }
    auto D = [&](double x) { return jt.at(x) - poly4.eval_q(std::log(x)); };
    auto opt = detail::mellin_kernel_options(s.imag(), 1e-8, 4'000'000);

    // boundary piece [1, 2] with the complementary weight, then smooth dyadic
    // pieces until the cap
    val += integrate_adaptive<cplx>(
               [&](double x) {
                   const double wgt = 1.0 - smooth_ramp(2.0 * std::log2(x) - 1.0);
                   return wgt * D(x) * std::exp(-s * std::log(x));
               },
               1.0, 2.0, opt)
               .integral;
    double last = 0.0;
    for (int j = 1;; ++j) {
        const double lo = std::pow(2.0, j - 0.5);
        const double hi = std::pow(2.0, j + 1.0);
        if (lo >= x_cap || hi > jt.x_max) break;
        const cplx piece = integrate_adaptive<cplx>(
                               [&](double x) {
                                   return dyadic_partition_piece(j, x) * D(x) *
                                          std::exp(-s * std::log(x));
                               },
                               lo, std::min(hi, x_cap), opt)
                               .integral;
        val += piece;
        last = std::abs(piece);
    }
    if (top_piece) *top_piece = last;
    return val;
}

inline Theorem3Scan theorem3_scan(double sigma, double xi, const std::vector<double>& t_list,
                                  const JTable& jt, const MomentPolynomial& poly4) {
    require(sigma > 0.5 && sigma <= 1.0, "theorem3_scan: 1/2 < sigma <= 1 required");
    require(xi >= 1.0 / 3.0 && xi <= 1.0, "theorem3_scan: 1/3 <= xi <= 1 required");
    require(!t_list.empty(), "theorem3_scan: nonempty height list required");

    Theorem3Scan out;
    out.sigma = sigma;
    out.xi = xi;
    out.bound = 1.0 - sigma + 0.3;
    std::vector<double> lx, ly;
    for (double t : t_list) {
        Theorem3Point p;
        p.t = t;
        p.x_max = std::min(jt.x_max, std::max(800.0, 4.0 * t));
        p.value = z_xi_line_value(cplx(sigma, t), jt, poly4, p.x_max, &p.top_piece);
        out.points.push_back(p);
        if (std::abs(p.value) > 0.0) {
            lx.push_back(std::log(t));
            ly.push_back(std::log(std::abs(p.value)));
        }
    }
    const auto fit = fit_line(lx, ly);
    out.degenerate = fit.degenerate;
    out.exponent = fit.slope;
    out.violated = !out.degenerate && out.exponent > out.bound;
    return out;
}

} // namespace zetalab
