#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "zetalab/common.hpp"

namespace zetalab {

namespace detail {

// C-infinity ramp: 0 for v <= 0, 1 for v >= 1, built from the exp(-1/v) profile
inline long double ramp_l(long double v) {
    if (v <= 0.0L) return 0.0L;
    if (v >= 1.0L) return 1.0L;
    const long double a = expl(-1.0L / v);
    const long double b = expl(-1.0L / (1.0L - v));
    return a / (a + b);
}

// plateau template: 1 on |v| <= 1, 0 beyond |v| >= 2, smooth in between
inline long double plateau_l(long double v) { return ramp_l(2.0L - fabsl(v)); }

// sup |d^m/dv^m plateau| for m = 0..6, measured once by iterated central
// differences on a fine grid over the transition band
inline const std::array<double, 7>& plateau_derivative_sups() {
    static const std::array<double, 7> sups = [] {
        std::array<double, 7> out{};
        const long double dv = 1.0L / 512.0L;
        const int n = static_cast<int>(1.2L / dv); // v in [0.9, 2.1]
        std::vector<long double> vals(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = plateau_l(0.9L + dv * i);
        out[0] = 1.0;
        std::vector<long double> cur = vals;
        for (int m = 1; m <= 6; ++m) {
            std::vector<long double> next(cur.size() - 1);
            for (std::size_t i = 0; i + 1 < cur.size(); ++i)
                next[i] = (cur[i + 1] - cur[i]) / dv;
            cur = std::move(next);
            long double sup = 0.0L;
            for (auto v : cur) sup = std::max(sup, fabsl(v));
            out[static_cast<std::size_t>(m)] = static_cast<double>(sup);
        }
        return out;
    }();
    return sups;
}

} // namespace detail

inline double smooth_ramp(double v) { return static_cast<double>(detail::ramp_l(v)); }

// Smooth weight equal to 1 on [center-G, center+G], supported in
// [center-2G, center+2G], with |phi^(m)| <= C_m G^{-m} and the C_m recorded.
struct Mollifier {
    double center = 0.0;
    double G = 1.0;
    int smoothness_cap = 6;

    void validate() const {
        require(G > 0.0, "Mollifier: G > 0 required");
        require(smoothness_cap >= 0 && smoothness_cap <= 6,
                "Mollifier: derivative records available for m <= 6");
    }

    [[nodiscard]] double operator()(double x) const {
        return static_cast<double>(detail::plateau_l((x - center) / G));
    }
    [[nodiscard]] double support_lo() const { return center - 2.0 * G; }
    [[nodiscard]] double support_hi() const { return center + 2.0 * G; }

    // recorded constant C_m with |phi^(m)| <= C_m G^{-m}
    [[nodiscard]] double derivative_constant(int m) const {
        require(m >= 0 && m <= smoothness_cap,
                "Mollifier: m <= smoothness cap required");
        return detail::plateau_derivative_sups()[static_cast<std::size_t>(m)];
    }
};

// Smooth cutoff supported in [X/2, 5X/2], equal to 1 on [X, 2X]; edge width
// X/2, so the m-th derivative is bounded by C_m (2/X)^m.
struct DyadicCutoff {
    double X = 1.0;

    [[nodiscard]] double operator()(double x) const {
        if (x <= X / 2.0 || x >= 2.5 * X) return 0.0;
        if (x < X) return smooth_ramp((x - X / 2.0) / (X / 2.0));
        if (x <= 2.0 * X) return 1.0;
        return smooth_ramp((2.5 * X - x) / (X / 2.0));
    }
    [[nodiscard]] double derivative_bound(int m) const {
        return detail::plateau_derivative_sups()[static_cast<std::size_t>(m)] *
               std::pow(2.0 / X, m);
    }
};

// Telescoping dyadic partition of unity in u = log2 x: piece j is supported
// on [2^{j-1/2}, 2^{j+1}], equals 1 on [2^j, 2^{j+1/2}], and the pieces sum
// to 1 between the first and last plateau.
inline double dyadic_partition_piece(int j, double x) {
    require(x > 0.0, "dyadic_partition_piece: x > 0 required");
    const double u = std::log2(x) - static_cast<double>(j);
    return smooth_ramp(2.0 * u + 1.0) - smooth_ramp(2.0 * u - 1.0);
}

} // namespace zetalab
