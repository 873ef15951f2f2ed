#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/cumulative.hpp"
#include "zetalab/grid.hpp"
#include "zetalab/mollifier.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

// ---------------------------------------------------------------------------
// well-spaced points in (T, 2T)

struct WellSpacedSet {
    double T = 0.0;
    double G = 0.0;
    std::vector<double> points; // increasing, consecutive gaps >= G
    double eps = 0.1;

    void validate() const {
        require(T > 1.0 && G > 0.0, "WellSpacedSet: T > 1 and G > 0 required");
        require(G >= std::pow(T, eps) && G <= std::pow(T, 1.0 - eps),
                "WellSpacedSet: T^eps <= G <= T^(1-eps) required");
        for (std::size_t i = 0; i < points.size(); ++i) {
            require(points[i] > T && points[i] < 2.0 * T,
                    "WellSpacedSet: points inside (T, 2T) required");
            if (i > 0)
                require(points[i] - points[i - 1] >= G * (1.0 - 1e-12),
                        "WellSpacedSet: consecutive gaps >= G required");
        }
    }

    [[nodiscard]] std::size_t size() const { return points.size(); }
};

// R points at uniform spacing `gap` >= G starting at T + G
inline WellSpacedSet uniform_well_spaced(double T, double G, std::size_t R, double gap,
                                         double eps = 0.1) {
    WellSpacedSet ws;
    ws.T = T;
    ws.G = G;
    ws.eps = eps;
    for (std::size_t r = 0; r < R; ++r) ws.points.push_back(T + G + gap * static_cast<double>(r));
    ws.validate();
    return ws;
}

// ---------------------------------------------------------------------------
// L_k(t, G) = int_{t-G}^{t+G} |zeta|^{2k}

inline double interval_moment(double t, double G, int k, const PrecisionPolicy& policy = {},
                              double tol = 1e-8, long max_evals = 10'000'000) {
    require(t - G >= 0.0, "interval_moment: t - G >= 0 required");
    require(G >= 0.0, "interval_moment: G >= 0 required");
    if (G == 0.0) return 0.0;
    AdaptiveOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = tol;
    opt.max_evals = max_evals;
    opt.initial_cell = 0.5;
    opt.max_cell_at = [](double x) { return zeta_cell_width(x); };
    return integrate_adaptive<double>(
               [&](double u) { return eval_abs_power(u, k, policy); }, t - G, t + G, opt)
        .integral;
}

inline double interval_moment_cached(double t, double G, const CumulativeMoment& table) {
    require(t - G >= 0.0, "interval_moment: t - G >= 0 required");
    return table.interval(t - G, t + G);
}

// ---------------------------------------------------------------------------
// grid-sampled measure of {t in [T, 2T] : L_k(t, G) >= G U}

struct MeasureEstimate {
    double measure = 0.0;
    double uncertainty = 0.0;
    long crossings = 0;
    long hits = 0;
    long samples = 0;
};

inline MeasureEstimate measure_large_values(double T, double G, int k, double U, double mesh,
                                            const CumulativeMoment& table) {
    require(mesh > 0.0 && mesh <= G / 4.0, "measure_large_values: mesh <= G/4 required");
    require(T - G >= 0.0, "measure_large_values: T - G >= 0 required");
    require(2.0 * T + G <= table.t_max(), "measure_large_values: table too short");
    MeasureEstimate out;
    const double threshold = G * U;
    bool prev = false;
    for (double t = T; t <= 2.0 * T + 1e-12; t += mesh) {
        const bool hit = table.interval(t - G, t + G) >= threshold;
        ++out.samples;
        if (hit) ++out.hits;
        if (out.samples > 1 && hit != prev) ++out.crossings;
        prev = hit;
    }
    out.measure = mesh * static_cast<double>(out.hits);
    out.uncertainty = 2.0 * mesh * static_cast<double>(out.crossings);
    return out;
}

// ---------------------------------------------------------------------------
// split into <= 5 subsequences with gaps >= 5G (round-robin by index)

inline std::vector<std::vector<double>> five_split(const WellSpacedSet& ws) {
    ws.validate(); // spacing violation surfaces here
    std::vector<std::vector<double>> classes(std::min<std::size_t>(5, std::max<std::size_t>(
                                                                          ws.points.size(), 1)));
    if (ws.points.empty()) return {};
    for (std::size_t i = 0; i < ws.points.size(); ++i)
        classes[i % classes.size()].push_back(ws.points[i]);
    return classes;
}

// ---------------------------------------------------------------------------
// dyadic decomposition of sum_r L_k(t_r, G) with the optimal threshold
// U0 = (T/(R G))^{1/m}

struct DyadicLevel {
    double lower = 0.0; // level covers lower < L <= 2 * lower
    long count = 0;
    double sum = 0.0;
};

struct DyadicReport {
    double total = 0.0;          // sum_r L_k(t_r, G)
    double U0 = 0.0;
    double base_sum = 0.0;       // part with L <= G U0
    std::vector<DyadicLevel> levels;
    double piece_GRU0 = 0.0;     // G R U0
    double piece_tail = 0.0;     // T^{1+eps} U0^{1-m}
    double theoretical = 0.0;    // (R G)^{(m-1)/m} T^{1/m + eps}
    double constant = 0.0;       // total / theoretical
    std::vector<double> L_values;
};

inline DyadicReport dyadic_sum_bound(const WellSpacedSet& ws, int k, int m,
                                     const CumulativeMoment& table, double eps = 0.1) {
    require(m >= 1, "dyadic_sum_bound: m >= 1 required");
    ws.validate();
    DyadicReport rep;
    const double R = static_cast<double>(ws.points.size());
    if (ws.points.empty()) return rep;

    rep.U0 = std::pow(ws.T / (R * ws.G), 1.0 / m);
    NeumaierSum total;
    std::vector<DyadicLevel> levels;
    double base = 0.0;
    for (double t : ws.points) {
        const double L = interval_moment_cached(t, ws.G, table);
        rep.L_values.push_back(L);
        total.add(L);
        const double cut = ws.G * rep.U0;
        if (L <= cut) {
            base += L;
        } else {
            const auto lvl = static_cast<std::size_t>(std::floor(std::log2(L / cut)));
            if (levels.size() <= lvl) levels.resize(lvl + 1);
            levels[lvl].lower = cut * std::pow(2.0, static_cast<double>(lvl));
            ++levels[lvl].count;
            levels[lvl].sum += L;
        }
    }
    rep.total = total.value();
    rep.base_sum = base;
    rep.levels = std::move(levels);

    // levels plus base reconstruct the sum exactly
    double recon = rep.base_sum;
    for (const auto& l : rep.levels) recon += l.sum;
    require(std::abs(recon - rep.total) <= 1e-9 * std::max(1.0, std::abs(rep.total)),
            "dyadic_sum_bound: level reconstruction failed");

    rep.piece_GRU0 = ws.G * R * rep.U0;
    rep.piece_tail = std::pow(ws.T, 1.0 + eps) * std::pow(rep.U0, 1.0 - m);
    rep.theoretical = std::pow(R * ws.G, (m - 1.0) / m) * std::pow(ws.T, 1.0 / m + eps);
    rep.constant = rep.total / rep.theoretical;
    return rep;
}

// ---------------------------------------------------------------------------
// greedy selection of unit-spaced large values on the sample grid, with the
// pointwise-to-local-integral comparison for each selected ordinate

struct LargeValuePoint {
    double t = 0.0;
    double abs_zeta = 0.0;
    double local_integral = 0.0; // L_k(t, 1/3)
    double constant = 0.0;       // |zeta|^{2k} / (log T * L_k(t, 1/3))
};

struct LargeValueReport {
    std::vector<LargeValuePoint> points;
    double V = 0.0;
    double max_constant = 0.0;
    bool checked = false;
};

inline LargeValueReport large_value_points(double T, double V, int k, const SampleGrid& grid,
                                           const CumulativeMoment& table) {
    require(V >= 0.0, "large_value_points: V >= 0 required");
    require(grid.t0 <= T && grid.t1 >= 2.0 * T, "large_value_points: grid must cover [T, 2T]");
    LargeValueReport rep;
    rep.V = V;
    rep.checked = V >= 1.0;
    double last = -1e300;
    const double logT = std::log(T);
    for (const auto& s : grid.samples) {
        if (s.t < T || s.t > 2.0 * T) continue;
        if (s.t - last < 1.0) continue;
        const double az = std::sqrt(s.abs2());
        if (az < V) continue;
        LargeValuePoint p;
        p.t = s.t;
        p.abs_zeta = az;
        if (rep.checked) {
            p.local_integral = interval_moment_cached(s.t, 1.0 / 3.0, table);
            p.constant = s.abs_pow2k(k) / (logT * p.local_integral);
            rep.max_constant = std::max(rep.max_constant, p.constant);
        }
        rep.points.push_back(p);
        last = s.t;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// decay of the mollified Mellin kernel: |int phi_r(x) x^{s-1} dx| against the
// integration-by-parts envelope T^{sigma+m-1} / (G^m (1+|t|)^m)

struct MollifierDecay {
    double exact_abs = 0.0;
    double bound = 0.0;
    double constant = 0.0; // exact / bound
};

inline MollifierDecay mollifier_decay_check(const Mollifier& phi, cplx s, int m,
                                            double tol = 1e-10) {
    phi.validate();
    require(m >= 0 && m <= phi.smoothness_cap,
            "mollifier_decay_check: m <= smoothness cap required");
    AdaptiveOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = tol;
    const double w = std::abs(s.imag()) + 1e-9;
    opt.initial_cell = std::max(phi.G / 8.0, 1e-3);
    opt.max_cell_at = [w](double x) { return 2.0 * x / w; };
    const auto r = integrate_adaptive<cplx>(
        [&](double x) { return phi(x) * std::exp((s - 1.0) * std::log(x)); },
        phi.support_lo(), phi.support_hi(), opt);
    MollifierDecay out;
    out.exact_abs = std::abs(r.integral);
    const double Tscale = phi.center + 2.0 * phi.G;
    out.bound = std::pow(Tscale, s.real() + m - 1.0) /
                (std::pow(phi.G, m) * std::pow(1.0 + std::abs(s.imag()), m));
    out.constant = out.exact_abs / out.bound;
    return out;
}

// ---------------------------------------------------------------------------
// exponent plumbing for the corollaries (pure arithmetic)

// moment exponent from the short-interval hypothesis: T^{1 + (m-1) alpha}
inline double corollary2_exponent(int m, double alpha) {
    require(m >= 1 && alpha >= 0.0 && alpha <= 1.0,
            "corollary2_exponent: m >= 1, alpha in [0,1] required");
    return 1.0 + (m - 1.0) * alpha;
}

// large-values chain: S V^{2k} << T^eps (S G + S^{1/2} T G^{-1/2}) with the
// optimal G = V^{2k} T^{-eps} gives S << T^{2+3eps} V^{-6k}; the twelfth
// moment (k = 2) integrates to exponent 2.
struct LargeValueExponents {
    double T_exponent = 2.0;
    double V_exponent = 0.0;
    double G_choice_V_exponent = 0.0;
};

inline LargeValueExponents large_value_count_exponents(int k) {
    require(k >= 1, "large_value_count_exponents: k >= 1 required");
    LargeValueExponents e;
    e.T_exponent = 2.0;
    e.V_exponent = -6.0 * k;
    e.G_choice_V_exponent = 2.0 * k;
    return e;
}

// moment int |zeta|^{6k} via dyadic V blocks: V^{6k} S(V) with the count
// bound above; the V powers cancel and the T exponent survives
inline double high_moment_exponent_from_counts(int k) {
    const auto e = large_value_count_exponents(k);
    const double v_cancel = 6.0 * k + e.V_exponent;
    return e.T_exponent + std::max(0.0, v_cancel);
}

} // namespace zetalab
