#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "zetalab/common.hpp"

namespace zetalab {

// Main-term polynomial P_{k^2}: I_k(T) ~ T * sum_j a_j log^j T.
struct MomentPolynomial {
    int k = 1;
    std::vector<double> a; // a[j], j = 0..k^2

    void validate() const {
        require(k >= 1, "MomentPolynomial: k >= 1 required");
        require(a.size() == static_cast<std::size_t>(k * k + 1),
                "MomentPolynomial: degree must be exactly k^2");
        require(a.back() != 0.0, "MomentPolynomial: leading coefficient must be nonzero");
    }

    [[nodiscard]] double eval(double logT) const {
        double acc = 0.0;
        for (std::size_t j = a.size(); j-- > 0;) acc = acc * logT + a[j];
        return acc;
    }
    [[nodiscard]] double eval_derivative(double logT) const {
        double acc = 0.0;
        for (std::size_t j = a.size(); j-- > 1;) acc = acc * logT + a[j] * static_cast<double>(j);
        return acc;
    }

    // q_j = a_j + (j+1) a_{j+1}: coefficients of Q = P + P'
    [[nodiscard]] std::vector<double> q_coeffs() const {
        std::vector<double> q(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            q[j] = a[j];
            if (j + 1 < a.size()) q[j] += static_cast<double>(j + 1) * a[j + 1];
        }
        return q;
    }
    [[nodiscard]] double eval_q(double logT) const {
        return eval(logT) + eval_derivative(logT);
    }

    // main term T P(log T), defined as 0 below T = 1 to avoid the log
    // singularity (documented convention)
    [[nodiscard]] double main_term(double T) const {
        if (T < 1.0) return 0.0;
        return T * eval(std::log(T));
    }

    // classical second-moment pair: I_1(T) = T log T + (2 gamma - 1 - log 2pi) T + E_1
    static MomentPolynomial classical_second_moment() {
        return MomentPolynomial{1, {2.0 * kEulerGamma - 1.0 - kLog2Pi, 1.0}};
    }
};

// Principal part of Z_k at s = 1 derived from the main-term polynomial:
// order k^2+1, top coefficient a_{k^2} (k^2)!, lower ones a_j j! + a_{j+1} (j+1)!.
struct PoleExpansion {
    int k = 1;
    std::vector<double> coeff; // coeff[j] multiplies (s-1)^{-(j+1)}, j = 0..k^2

    static PoleExpansion from_polynomial(const MomentPolynomial& poly) {
        poly.validate();
        PoleExpansion pe;
        pe.k = poly.k;
        const std::size_t top = poly.a.size() - 1;
        pe.coeff.resize(poly.a.size());
        double fact = 1.0; // j!
        for (std::size_t j = 0; j <= top; ++j) {
            if (j > 0) fact *= static_cast<double>(j);
            double c = poly.a[j] * fact;
            if (j + 1 <= top) c += poly.a[j + 1] * fact * static_cast<double>(j + 1);
            pe.coeff[j] = c;
        }
        return pe;
    }

    [[nodiscard]] int order() const { return k * k + 1; }

    [[nodiscard]] cplx eval(cplx s) const {
        const cplx w = 1.0 / (s - 1.0);
        cplx acc(0.0, 0.0);
        cplx wp = w;
        for (double c : coeff) {
            acc += c * wp;
            wp *= w;
        }
        return acc;
    }
};

// int_X^inf log^j x * x^{-s} dx = T_j with the downward recursion
// T_j = e^{-aL} L^j / a + (j/a) T_{j-1},  a = s-1, L = log X  (Re s > 1).
inline std::vector<cplx> log_power_tails(std::size_t jmax, double X, cplx s) {
    const cplx a = s - 1.0;
    const double L = std::log(X);
    std::vector<cplx> T(jmax + 1);
    const cplx e = std::exp(-a * L);
    T[0] = e / a;
    double Lp = 1.0;
    for (std::size_t j = 1; j <= jmax; ++j) {
        Lp *= L;
        T[j] = e * Lp / a + static_cast<double>(j) / a * T[j - 1];
    }
    return T;
}

// closed form of int_X^inf (P+P')(log x) x^{-s} dx
inline cplx poly_q_tail(const MomentPolynomial& poly, double X, cplx s) {
    const auto q = poly.q_coeffs();
    const auto T = log_power_tails(q.size() - 1, X, s);
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < q.size(); ++j) acc += q[j] * T[j];
    return acc;
}

struct PolyFit {
    MomentPolynomial poly;
    double condition = 0.0;
    double max_rel_residual = 0.0;
};

// Least squares of I_k(T)/T against {log^j T}; optionally pins the leading
// coefficient and fits only the lower ones.
inline PolyFit fit_moment_polynomial(int k, const std::vector<double>& T_grid,
                                     const std::vector<double>& I_values,
                                     std::optional<double> fixed_leading = std::nullopt) {
    require(k >= 1, "fit_moment_polynomial: k >= 1 required");
    const std::size_t deg = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
    require(T_grid.size() == I_values.size(), "fit_moment_polynomial: grid/value size mismatch");
    require(T_grid.size() >= 3 * (deg + 1),
            "fit_moment_polynomial: at least 3 (k^2 + 1) grid points required");
    const auto [mn, mx] = std::minmax_element(T_grid.begin(), T_grid.end());
    const std::size_t ncol = fixed_leading ? deg : deg + 1;

    Eigen::MatrixXd A(T_grid.size(), ncol);
    Eigen::VectorXd y(T_grid.size());
    for (std::size_t i = 0; i < T_grid.size(); ++i) {
        const double L = std::log(T_grid[i]);
        double target = I_values[i] / T_grid[i];
        double p = 1.0;
        for (std::size_t j = 0; j < ncol; ++j) {
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = p;
            p *= L;
        }
        if (fixed_leading) target -= *fixed_leading * std::pow(L, static_cast<double>(deg));
        y(static_cast<Eigen::Index>(i)) = target;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double cond = svd.singularValues()(0) /
                        svd.singularValues()(svd.singularValues().size() - 1);
    if (*mx / *mn < 10.0)
        throw domain_error("fit_moment_polynomial: T_grid must span at least one decade "
                           "(condition number " + format_g17(cond) + ")");
    Eigen::VectorXd x = svd.solve(y);

    PolyFit out;
    out.poly.k = k;
    out.poly.a.assign(deg + 1, 0.0);
    for (std::size_t j = 0; j < ncol; ++j) out.poly.a[j] = x(static_cast<Eigen::Index>(j));
    if (fixed_leading) out.poly.a[deg] = *fixed_leading;
    out.condition = cond;
    for (std::size_t i = 0; i < T_grid.size(); ++i) {
        const double fit = out.poly.main_term(T_grid[i]);
        out.max_rel_residual = std::max(out.max_rel_residual,
                                        std::abs(fit - I_values[i]) /
                                            std::max(1.0, std::abs(I_values[i])));
    }
    out.poly.validate();
    return out;
}

} // namespace zetalab
