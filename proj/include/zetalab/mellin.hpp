#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/cumulative.hpp"
#include "zetalab/polynomial.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

// abscissa of absolute convergence of Z_k
inline double mellin_abscissa(int k) {
    require(k >= 1 && k <= 6, "mellin_abscissa: 1 <= k <= 6 required");
    return k <= 2 ? 1.0 : (k + 2.0) / 4.0;
}

enum class MellinMethod { Direct, Continued };

struct MellinValue {
    cplx s;
    cplx value;
    MellinMethod method = MellinMethod::Direct;
    double truncation = 0.0; // X actually used
    double tail_bound = 0.0;
    double quad_error = 0.0;
};

namespace detail {

// crude moment-scale constants for the direct tail bound
// int_X^inf |zeta|^{2k} x^{-sigma} dx <= C_k X^{abscissa-sigma} log^{k^2} X
inline double direct_tail_bound(int k, double X, double sigma) {
    static constexpr std::array<double, 6> kC = {4.0, 1.0, 10.0, 40.0, 200.0, 1000.0};
    const double abscissa = mellin_abscissa(k);
    if (sigma <= abscissa + 1e-12) return std::numeric_limits<double>::infinity();
    const double lX = std::log(X);
    double geom = 0.0; // sum over dyadic blocks of 2^{j(abscissa-sigma)} (1 + j log2/logX)^{k^2}
    for (int j = 0;; ++j) {
        const double term = std::pow(2.0, (j + 1.0) * (abscissa - sigma)) *
                            std::pow(1.0 + (j + 1.0) * 0.6931471805599453 / lX,
                                     static_cast<double>(k) * k);
        geom += term;
        if (term < 1e-18 * geom || j > 4000) break;
    }
    return kC[static_cast<std::size_t>(k - 1)] * std::pow(X, abscissa - sigma) *
           std::pow(lX, static_cast<double>(k) * k) * geom;
}

inline AdaptiveOptions mellin_kernel_options(double im_s, double tol, long max_evals) {
    AdaptiveOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = tol;
    opt.max_evals = max_evals;
    opt.initial_cell = 1.0;
    const double w = std::abs(im_s) + 1e-9;
    opt.max_cell_at = [w](double x) {
        // ~2 radians of x^{-it} phase per panel, and the zeta oscillation scale
        return std::min(zeta_cell_width(x), 2.0 * x / w);
    };
    return opt;
}

} // namespace detail

// Z_k(s) by direct truncated quadrature of the defining integral over [1, X].
inline MellinValue mellin_direct(int k, cplx s, double X, double tol,
                                 const PrecisionPolicy& policy = {},
                                 long max_evals = 10'000'000) {
    const double abscissa = mellin_abscissa(k);
    require(s.real() >= abscissa + 0.1,
            "mellin_direct: Re s >= abscissa(k) + 0.1 required");
    require(X >= 10.0, "mellin_direct: X >= 10 required");

    auto opt = detail::mellin_kernel_options(s.imag(), tol, max_evals);
    auto res = integrate_adaptive<cplx>(
        [&](double x) {
            return eval_abs_power(x, k, policy) * std::exp(-s * std::log(x));
        },
        1.0, X, opt);

    MellinValue out;
    out.s = s;
    out.value = res.integral;
    out.method = MellinMethod::Direct;
    out.truncation = X;
    out.tail_bound = detail::direct_tail_bound(k, X, s.real());
    out.quad_error = res.err;
    return out;
}

// Measured coefficient of the mean-square growth of E_k (int_1^T E^2 ~ c T^theta,
// theta = 3/2 for k = 1 and 2 for k = 2); feeds the continued tail bound.
struct ErrorTailModel {
    int k = 1;
    double theta = 1.5;
    double c_hat = 1.0;
};

inline ErrorTailModel measure_error_tail(int k, const MomentPolynomial& poly,
                                         const CumulativeMoment& table) {
    ErrorTailModel m;
    m.k = k;
    m.theta = (k == 1) ? 1.5 : 2.0;
    const double T = table.t_max();
    AdaptiveOptions opt;
    opt.abs_tol = 1e-6;
    opt.rel_tol = 1e-6;
    opt.initial_cell = 2.0;
    const double V = integrate_adaptive<double>(
                         [&](double t) {
                             const double e = table.value(t) - poly.main_term(t);
                             return e * e;
                         },
                         1.0, T, opt)
                         .integral;
    m.c_hat = V / std::pow(T, m.theta);
    return m;
}

// Analytic continuation of Z_k through the error term:
//   Z_k(s) = principal part at s  -  E_k(1)  +  s int_1^X E_k(x) x^{-s-1} dx,
// with the tail beyond X estimated from the mean-square model by dyadic
// Cauchy-Schwarz (theta/2 - sigma - 1/2 per block).
inline MellinValue mellin_continued(int k, cplx s, const MomentPolynomial& poly,
                                    double X, const CumulativeMoment& table,
                                    const ErrorTailModel& tail, double tol = 1e-9,
                                    long max_evals = 10'000'000) {
    require(k == 1 || k == 2, "mellin_continued: k in {1, 2} required");
    require(poly.k == k, "mellin_continued: polynomial order mismatch");
    const double sigma = s.real();
    require(k == 1 ? sigma > 0.25 : sigma > 0.5,
            "mellin_continued: Re s inside the continuation strip required");
    if (std::abs(s - cplx(1.0, 0.0)) < 0.05)
        throw domain_error("mellin_continued: pole proximity |s-1| < 0.05 (principal part only)");
    require(X > 2.0 && X <= table.t_max() + 1e-9,
            "mellin_continued: X inside the cumulative table required");

    const auto pe = PoleExpansion::from_polynomial(poly);
    const double E1 = table.value(1.0) - poly.main_term(1.0);

    auto opt = detail::mellin_kernel_options(s.imag(), tol, max_evals);
    auto res = integrate_adaptive<cplx>(
        [&](double x) {
            const double e = table.value(x) - poly.main_term(x);
            return e * std::exp(-(s + 1.0) * std::log(x));
        },
        1.0, X, opt);

    MellinValue out;
    out.s = s;
    out.method = MellinMethod::Continued;
    out.truncation = X;
    out.value = pe.eval(s) - E1 + s * res.integral;
    // dyadic Cauchy-Schwarz on the discarded s int_X^inf E x^{-s-1} dx:
    //   sum_j sqrt(c (2^{j+1} X)^theta) (2^j X)^{-sigma-1/2},
    // geometric with ratio 2^{theta/2 - sigma - 1/2} < 1 inside the strip.
    const double e0 = tail.theta / 2.0 - sigma - 0.5;
    out.tail_bound = std::abs(s) * std::sqrt(tail.c_hat) * std::pow(2.0, tail.theta / 2.0) *
                     std::pow(X, e0) / (1.0 - std::pow(2.0, e0));
    out.quad_error = res.err * std::abs(s);
    return out;
}

// principal part alone (served inside the pole-exclusion radius)
inline cplx mellin_principal_part(const MomentPolynomial& poly, cplx s) {
    return PoleExpansion::from_polynomial(poly).eval(s);
}

// ---------------------------------------------------------------------------
// Mellin inversion of the fourth power: Q_4(log x) + (1/2pi) int Z_2 x^{s-1} dt
// on the shifted vertical line.  Z_2 values on the line are supplied as a
// uniform table (t_j = j * dt, j = 0..n-1) so scans across x reuse them.

struct MellinLine {
    double sigma = 0.75;
    double dt = 0.25;
    std::vector<cplx> values; // Z_2(sigma + i j dt)
};

inline MellinLine build_mellin_line(int k, double sigma, double t_max, double dt,
                                    const MomentPolynomial& poly, double X,
                                    const CumulativeMoment& table, const ErrorTailModel& tail) {
    MellinLine line;
    line.sigma = sigma;
    line.dt = dt;
    const auto n = static_cast<std::size_t>(std::floor(t_max / dt)) + 1;
    line.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const cplx s(sigma, dt * static_cast<double>(j));
        line.values[j] = mellin_continued(k, s, poly, X, table, tail, 1e-8).value;
    }
    return line;
}

struct InversionResult {
    double value = 0.0;       // Q_4(log x) + line integral
    double q4_term = 0.0;
    double line_term = 0.0;
    double truncation_residual = 0.0; // magnitude of the outermost strip
};

inline InversionResult mellin_invert_fourth(double x, double sigma_line, double t_max,
                                            const MomentPolynomial& poly,
                                            const MellinLine& line) {
    require(x > 1.0, "mellin_invert_fourth: x > 1 required");
    require(sigma_line > 0.5 && sigma_line < 1.0,
            "mellin_invert_fourth: 1/2 < sigma_line < 1 required");
    require(line.sigma == sigma_line, "mellin_invert_fourth: line table sigma mismatch");
    require(poly.k == 2, "mellin_invert_fourth: fourth power needs the k = 2 polynomial");

    InversionResult out;
    out.q4_term = poly.eval_q(std::log(x));
    if (t_max <= 0.0) {
        out.value = out.q4_term;
        return out;
    }
    const std::size_t n = std::min<std::size_t>(
        line.values.size(), static_cast<std::size_t>(std::floor(t_max / line.dt)) + 1);
    // conjugate symmetry: integral over (-t_max, t_max) = 2 Re integral over (0, t_max)
    const double lx = std::log(x);
    NeumaierSum acc;
    double outer = 0.0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        auto kernel = [&](std::size_t i) {
            const double t = line.dt * static_cast<double>(i);
            const cplx xs = std::exp(cplx(sigma_line - 1.0, t) * lx);
            return (line.values[i] * xs).real();
        };
        const double seg = 0.5 * line.dt * (kernel(j) + kernel(j + 1)); // trapezoid
        acc.add(seg);
        if (j + 2 == n) outer = std::abs(seg);
    }
    out.line_term = 2.0 * acc.value() / kTwoPi;
    out.truncation_residual = 2.0 * outer / kTwoPi;
    out.value = out.q4_term + out.line_term;
    return out;
}

// ---------------------------------------------------------------------------
// vertical-line mean square of Z_2 with the empirical growth exponent

struct MeanSquareScan {
    double sigma = 0.0;
    std::vector<double> T;
    std::vector<double> integral; // int_1^T |Z_2(sigma+it)|^2 dt
    double exponent = 0.0;
    bool degenerate = false;
    double bound_2_7 = 0.0; // (10-8 sigma)/3
    double bound_2_8 = 0.0; // (15-12 sigma)/5
    double bound_2_9 = 0.0; // (7-6 sigma)/2
    double bound_2_6 = 0.0; // (2-2 sigma)/(1-c) vs 1, with the configured c
};

inline MeanSquareScan mean_square_scan(double sigma, double T, const MomentPolynomial& poly,
                                       const CumulativeMoment& table, const ErrorTailModel& tail,
                                       double X, double mesh = 0.25, double c_exponent = 2.0 / 3.0) {
    require(sigma > 0.5 && sigma < 1.0, "mean_square_scan: sigma in (1/2, 1) required");
    require(T <= 1000.0, "mean_square_scan: T <= 1e3 at desk scale required");
    require(c_exponent >= 0.5 && c_exponent <= 2.0 / 3.0,
            "mean_square_scan: c exponent in [1/2, 2/3] required");

    MeanSquareScan out;
    out.sigma = sigma;
    out.bound_2_7 = (10.0 - 8.0 * sigma) / 3.0;
    out.bound_2_8 = (15.0 - 12.0 * sigma) / 5.0;
    out.bound_2_9 = (7.0 - 6.0 * sigma) / 2.0;
    out.bound_2_6 = std::max(1.0, (2.0 - 2.0 * sigma) / (1.0 - c_exponent));
    if (T <= 1.0) {
        out.T = {T};
        out.integral = {0.0};
        out.degenerate = true;
        return out;
    }

    // |Z_2|^2 on a uniform mesh from t = 1, trapezoid prefix
    const auto n = static_cast<std::size_t>(std::floor((T - 1.0) / mesh)) + 1;
    std::vector<double> abs2(n);
    for (std::size_t j = 0; j < n; ++j) {
        const cplx s(sigma, 1.0 + mesh * static_cast<double>(j));
        const cplx z = mellin_continued(2, s, poly, X, table, tail, 1e-7).value;
        abs2[j] = std::norm(z);
    }
    NeumaierSum acc;
    std::vector<double> lx, ly;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        acc.add(0.5 * mesh * (abs2[j] + abs2[j + 1]));
        const double t = 1.0 + mesh * static_cast<double>(j + 1);
        out.T.push_back(t);
        out.integral.push_back(acc.value());
        if (t > 0.3 * T && acc.value() > 0.0) {
            lx.push_back(std::log(t));
            ly.push_back(std::log(acc.value()));
        }
    }
    const auto fit = fit_line(lx, ly);
    out.degenerate = fit.degenerate;
    out.exponent = fit.slope;
    return out;
}

// ---------------------------------------------------------------------------
// Lemma-1-style mean value inequality for sampled kernels g on [a, b]:
//   int_0^T | int_a^b g(x) x^{-s} dx |^2 dt  <=  2 pi int_a^b g(x)^2 x^{1-2 sigma} dx.
// g is interpreted as the piecewise-linear interpolant of its samples.

struct SampledFunction {
    double a = 2.0;
    double b = 3.0;
    std::vector<double> values; // uniform samples on [a, b], at least 2

    [[nodiscard]] double mesh() const {
        return (b - a) / static_cast<double>(values.size() - 1);
    }
    [[nodiscard]] double operator()(double x) const {
        if (x <= a) return values.front();
        if (x >= b) return values.back();
        const double u = (x - a) / mesh();
        const auto i = std::min<std::size_t>(static_cast<std::size_t>(u), values.size() - 2);
        const double w = u - static_cast<double>(i);
        return values[i] * (1.0 - w) + values[i + 1] * w;
    }
};

struct Lemma1Check {
    double left = 0.0;
    double right = 0.0;
};

inline Lemma1Check lemma1_check(const SampledFunction& g, double sigma, double T) {
    require(g.a >= 2.0, "lemma1_check: a >= 2 required");
    require(g.b > g.a && g.values.size() >= 2, "lemma1_check: nontrivial sample set required");
    require(T > 0.0, "lemma1_check: T > 0 required");

    AdaptiveOptions inner;
    inner.abs_tol = 1e-11;
    inner.rel_tol = 1e-10;
    inner.initial_cell = std::max(g.mesh(), (g.b - g.a) / 64.0);

    auto F = [&](double t) {
        const cplx s(sigma, t);
        auto r = integrate_adaptive<cplx>(
            [&](double x) { return g(x) * std::exp(-s * std::log(x)); }, g.a, g.b, inner);
        return std::norm(r.integral);
    };

    AdaptiveOptions outer;
    outer.abs_tol = 1e-9;
    outer.rel_tol = 1e-8;
    outer.initial_cell = std::min(1.0, kTwoPi / (4.0 * std::log(g.b)));
    Lemma1Check out;
    out.left = integrate_adaptive<double>(F, 0.0, T, outer).integral;

    AdaptiveOptions rq;
    rq.abs_tol = 1e-12;
    rq.rel_tol = 1e-11;
    rq.initial_cell = g.mesh();
    out.right = kTwoPi *
                integrate_adaptive<double>(
                    [&](double x) {
                        const double v = g(x);
                        return v * v * std::pow(x, 1.0 - 2.0 * sigma);
                    },
                    g.a, g.b, rq)
                    .integral;
    return out;
}

} // namespace zetalab
