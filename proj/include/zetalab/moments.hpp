#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/cumulative.hpp"
#include "zetalab/polynomial.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

// I_k(T) by adaptive quadrature; estimated absolute error <= tol * max(1, I).
inline double moment_integral(int k, double T, double tol, const PrecisionPolicy& policy = {},
                              long max_evals = 10'000'000) {
    require(k >= 1 && k <= 6, "moment_integral: 1 <= k <= 6 required");
    require(T >= 0.0 && T <= 1e6, "moment_integral: 0 <= T <= 1e6 required");
    require(tol >= 1e-8, "moment_integral: tol >= 1e-8 required");
    if (T == 0.0) return 0.0;
    AdaptiveOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = tol;
    opt.max_evals = max_evals;
    opt.initial_cell = 1.0;
    opt.max_cell_at = [](double t) { return zeta_cell_width(t); };
    auto res = integrate_adaptive<double>(
        [&](double t) { return eval_abs_power(t, k, policy); }, 0.0, T, opt);
    return res.integral;
}

// d_k(p^j) = binom(j+k-1, k-1): ordered factorizations of p^j into k factors
inline std::uint64_t divisor_prime_power(int k, int j) {
    require(k >= 1, "divisor_prime_power: k >= 1 required");
    require(j >= 0, "divisor_prime_power: j >= 0 required");
    std::uint64_t num = 1, den = 1;
    // binom(j+k-1, k-1) with k small; exact in 64 bits for the supported range
    for (int i = 1; i <= k - 1; ++i) {
        num *= static_cast<std::uint64_t>(j + i);
        den *= static_cast<std::uint64_t>(i);
    }
    return num / den;
}

inline std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= n; q += p)
            composite[static_cast<std::size_t>(q)] = true;
    }
    return out;
}

struct RmtConstants {
    int k = 0;
    double a_k = 0.0;        // Euler product over p <= euler_cutoff
    std::int64_t g_num = 0;  // g_k as an exact rational (integer for all k here)
    std::int64_t g_den = 1;
    double g_k = 0.0;
    double c_k = 0.0;        // a_k g_k / (k^2)!
    std::uint32_t euler_cutoff = 0;
    double tail_bound = 0.0; // bound on the relative error of a_k from p > cutoff
};

// Leading moment constants: a_k (Euler product, j-sum truncated below 1e-16),
// g_k = (k^2)! prod_{j<k} j!/(j+k)! in exact rational arithmetic, and
// c_k = a_k g_k / Gamma(1+k^2).
inline RmtConstants rmt_constants(int k, std::uint32_t euler_cutoff) {
    require(k >= 1 && k <= 6, "rmt_constants: 1 <= k <= 6 required");
    require(euler_cutoff >= 100, "rmt_constants: euler_cutoff >= 100 required");

    RmtConstants out;
    out.k = k;
    out.euler_cutoff = euler_cutoff;

    long double log_a = 0.0L;
    for (std::uint32_t p : primes_up_to(euler_cutoff)) {
        const long double ip = 1.0L / p;
        long double sum = 0.0L;
        long double pj = 1.0L;
        for (int j = 0;; ++j) {
            const long double dk = static_cast<long double>(divisor_prime_power(k, j));
            const long double term = dk * dk * pj;
            sum += term;
            if (j > 0 && term < 1e-16L * sum) break;
            pj *= ip;
        }
        log_a += k * k * log1pl(-ip) + logl(sum);
    }
    out.a_k = static_cast<double>(expl(log_a));

    namespace mp = boost::multiprecision;
    mp::cpp_int num = 1, den = 1;
    auto fact = [](int n) {
        mp::cpp_int f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    num = fact(k * k);
    for (int j = 0; j <= k - 1; ++j) {
        num *= fact(j);
        den *= fact(j + k);
    }
    const mp::cpp_int g = mp::gcd(num, den);
    num /= g;
    den /= g;
    out.g_num = num.convert_to<std::int64_t>();
    out.g_den = den.convert_to<std::int64_t>();
    out.g_k = static_cast<double>(out.g_num) / static_cast<double>(out.g_den);

    long double log_fact = 0.0L;
    for (int i = 2; i <= k * k; ++i) log_fact += logl(static_cast<long double>(i));
    out.c_k = static_cast<double>(expl(log_a + logl((long double)out.g_k) - log_fact));

    // local factor is 1 + c2 p^{-2} + O(p^{-3}); crude tail over p > cutoff
    const double d2 = static_cast<double>(divisor_prime_power(k, 2));
    const double c2 = std::abs(d2 * d2 - std::pow(static_cast<double>(k), 4.0) +
                               0.5 * k * k * (k * k - 1.0));
    out.tail_bound = 2.0 * (c2 + 1.0) / static_cast<double>(euler_cutoff);
    return out;
}

struct MomentResult {
    int k = 0;
    double T = 0.0;
    double integral = 0.0;
    double main_term = 0.0;
    double error = 0.0;
    double quadrature_error_bound = 0.0;
};

// decomposition I_k(T) = T P(log T) + E_k(T); integral = main + error exactly
inline MomentResult error_term(int k, double T, const MomentPolynomial& poly,
                               const CumulativeMoment& table) {
    require(poly.k == k, "error_term: polynomial order mismatch");
    MomentResult r;
    r.k = k;
    r.T = T;
    r.integral = T <= 0.0 ? 0.0 : table.value(T);
    r.main_term = poly.main_term(T);
    r.error = r.integral - r.main_term;
    r.quadrature_error_bound = 1e-9 * std::max(1.0, r.integral);
    return r;
}

struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    bool degenerate = false;
    std::vector<double> T;
    std::vector<double> mean_square;
};

// Fitted slope of log int_1^T E^2 against log T.  The error function is a
// callable so synthetic profiles can calibrate the fitter.
inline ExponentFit mean_square_exponent(const std::function<double(double)>& err_fn,
                                        const std::vector<double>& T_grid) {
    require(T_grid.size() >= 2, "mean_square_exponent: at least two grid points required");
    const auto [mn, mx] = std::minmax_element(T_grid.begin(), T_grid.end());
    require(*mx / *mn >= 10.0, "mean_square_exponent: grid must span at least one decade");

    ExponentFit out;
    AdaptiveOptions opt;
    opt.abs_tol = 1e-9;
    opt.rel_tol = 1e-7;
    opt.initial_cell = 2.0;

    std::vector<double> Ts = T_grid;
    std::sort(Ts.begin(), Ts.end());
    double lo = 1.0;
    double acc = 0.0;
    std::vector<double> lx, ly;
    for (double T : Ts) {
        acc += integrate_adaptive<double>(
                   [&](double t) { const double e = err_fn(t); return e * e; }, lo, T, opt)
                   .integral;
        lo = T;
        out.T.push_back(T);
        out.mean_square.push_back(acc);
        if (acc > 0.0) {
            lx.push_back(std::log(T));
            ly.push_back(std::log(acc));
        }
    }
    if (lx.size() < 2) {
        out.degenerate = true;
        return out;
    }
    const auto fit = fit_line(lx, ly);
    out.degenerate = fit.degenerate;
    out.slope = fit.slope;
    out.intercept = fit.intercept;
    return out;
}

inline ExponentFit error_mean_square_exponent(int k, const std::vector<double>& T_grid,
                                              const MomentPolynomial& poly,
                                              const CumulativeMoment& table) {
    require(k == 1 || k == 2, "error_mean_square_exponent: k in {1,2} required");
    require(poly.k == k, "error_mean_square_exponent: polynomial order mismatch");
    return mean_square_exponent(
        [&](double t) { return table.value(t) - poly.main_term(t); }, T_grid);
}

// Reported fitted log-power of I_k(T) ~ C T log^p T; descriptive only (the
// sharp power for k > 2 is open).
inline LineFit fitted_log_power(const std::vector<double>& T_grid,
                                const std::vector<double>& I_values) {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < T_grid.size(); ++i) {
        if (I_values[i] <= 0.0) continue;
        x.push_back(std::log(std::log(T_grid[i])));
        y.push_back(std::log(I_values[i] / T_grid[i]));
    }
    return fit_line(x, y);
}

// CSV emission: header `T,I,main,E`, 17-significant-digit fields, LF endings
inline void write_moment_csv(const std::string& path, const std::vector<MomentResult>& rows) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("write_moment_csv: cannot open " + path);
    out << "T,I,main,E\n";
    for (const auto& r : rows)
        out << format_g17(r.T) << ',' << format_g17(r.integral) << ',' << format_g17(r.main_term)
            << ',' << format_g17(r.error) << '\n';
    if (!out) throw io_error("write_moment_csv: short write to " + path);
}

} // namespace zetalab
