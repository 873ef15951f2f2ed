#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "zetalab/mellin.hpp"
#include "zetalab/moments.hpp"

#include "oracles.hpp"

using namespace zetalab;

namespace {

const CumulativeMoment& table1() {
    static CumulativeMoment t(1, 2100.0, PrecisionPolicy{});
    return t;
}
const CumulativeMoment& table1_big() {
    static CumulativeMoment t(1, 10100.0, PrecisionPolicy{});
    return t;
}
const CumulativeMoment& table2_big() {
    static CumulativeMoment t(2, 10100.0, PrecisionPolicy{});
    return t;
}

const MomentPolynomial& poly1() {
    static MomentPolynomial p = MomentPolynomial::classical_second_moment();
    return p;
}

const ErrorTailModel& tail1() {
    static ErrorTailModel m = measure_error_tail(1, poly1(), table1());
    return m;
}

MomentPolynomial fit_poly2() {
    const auto& tab = table2_big();
    std::vector<double> T, I;
    for (int i = 0; i <= 16; ++i) {
        T.push_back(500.0 * std::pow(20.0, i / 16.0));
        I.push_back(tab.value(T.back()));
    }
    return fit_moment_polynomial(2, T, I).poly;
}

// completed truncated transform: adds the closed-form polynomial tail and the
// boundary term, after which direct and continued evaluations of Z_k agree to
// quadrature accuracy at the same truncation X
cplx completed_direct(int k, cplx s, double X, const MomentPolynomial& poly,
                      const CumulativeMoment& table) {
    const auto d = mellin_direct(k, s, X, 1e-9);
    const double EX = table.value(X) - poly.main_term(X);
    return d.value + poly_q_tail(poly, X, s) - std::exp(-s * std::log(X)) * EX;
}

} // namespace

TEST_CASE("abscissa of absolute convergence") {
    REQUIRE(mellin_abscissa(1) == 1.0);
    REQUIRE(mellin_abscissa(2) == 1.0);
    REQUIRE(mellin_abscissa(3) == 1.25);
    REQUIRE(mellin_abscissa(6) == 2.0);
}

TEST_CASE("direct transform against the fixed-mesh Simpson oracle") {
    const auto v = mellin_direct(1, cplx(3.0, 0.0), 100.0, 1e-9);
    const double simpson = oracle::simpson(
        [](double x) { return eval_abs_power(x, 1) * std::pow(x, -3.0); }, 1.0, 100.0, 1e-3);
    REQUIRE(v.value.real() == Catch::Approx(simpson).epsilon(1e-6));
    REQUIRE(std::abs(v.value.imag()) < 1e-10); // real s: real value
    REQUIRE(v.tail_bound > 0.0);
}

TEST_CASE("direct transform conjugate symmetry") {
    const cplx s(2.0, 3.5);
    const auto a = mellin_direct(1, s, 500.0, 1e-10);
    const auto b = mellin_direct(1, std::conj(s), 500.0, 1e-10);
    REQUIRE(std::abs(b.value - std::conj(a.value)) <= 1e-10 * std::abs(a.value));
}

TEST_CASE("direct transform preconditions") {
    REQUIRE_THROWS_AS(mellin_direct(1, cplx(1.05, 0.0), 100.0, 1e-9), domain_error);
    REQUIRE_THROWS_AS(mellin_direct(1, cplx(3.0, 0.0), 5.0, 1e-9), domain_error);
}

TEST_CASE("continued vs direct on the overlap strip (completed comparison)") {
    const double X = 300.0; // the completed identity holds at any truncation
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> re(1.2, 2.0), im(0.0, 5.0);
    for (int i = 0; i < 20; ++i) {
        const cplx s(re(rng), im(rng));
        const auto cont = mellin_continued(1, s, poly1(), X, table1(), tail1(), 1e-9);
        const cplx dirc = completed_direct(1, s, X, poly1(), table1());
        CAPTURE(s.real(), s.imag());
        REQUIRE(std::abs(dirc - cont.value) <= 1e-3 * std::abs(dirc));
    }
}

TEST_CASE("continued transform conjugate symmetry") {
    const cplx s(0.8, 4.0);
    const auto a = mellin_continued(1, s, poly1(), 1500.0, table1(), tail1());
    const auto b = mellin_continued(1, std::conj(s), poly1(), 1500.0, table1(), tail1());
    REQUIRE(std::abs(b.value - std::conj(a.value)) <= 1e-10 * std::abs(a.value));
}

TEST_CASE("pole proximity guard and principal-part service") {
    REQUIRE_THROWS_AS(mellin_continued(1, cplx(1.01, 0.0), poly1(), 1500.0, table1(), tail1()),
                      domain_error);
    // dominant term of the principal part near s = 1: a_1 1!/(s-1)^2 = 1e4 a_1
    const cplx pp = mellin_principal_part(poly1(), cplx(1.01, 0.0));
    REQUIRE(std::abs(pp.real() / 1e4 - 1.0) < 0.02);
}

TEST_CASE("pole order: (s-1)^2 Z_1(s) extrapolates to a_1 * 1!") {
    // delta = 0.1 through the full continuation, delta = 0.01 inside the
    // exclusion radius where only the principal part is served
    const cplx s1(1.1, 0.0);
    const auto z1 = mellin_continued(1, s1, poly1(), 1500.0, table1(), tail1());
    const double v1 = (0.1 * 0.1) * z1.value.real();
    const double v2 = (0.01 * 0.01) * mellin_principal_part(poly1(), cplx(1.01, 0.0)).real();
    const double extrap = v2 - (v1 - v2) * (0.01 / 0.09);
    REQUIRE(std::abs(extrap - poly1().a[1]) <= 0.05 * poly1().a[1]);
}

TEST_CASE("lemma-1 inequality: zero function") {
    SampledFunction g{2.0, 3.0, {0.0, 0.0, 0.0}};
    const auto r = lemma1_check(g, 1.0, 10.0);
    REQUIRE(r.left == 0.0);
    REQUIRE(r.right == 0.0);
}

TEST_CASE("lemma-1 inequality: indicator closed form") {
    SampledFunction g{2.0, 3.0, std::vector<double>(8, 1.0)};
    const auto r = lemma1_check(g, 1.0, 10.0);
    REQUIRE(r.right == Catch::Approx(kTwoPi * std::log(1.5)).margin(1e-8));
    REQUIRE(r.left <= r.right);
    REQUIRE(r.left > 0.0);
}

TEST_CASE("lemma-1 inequality: power kernel with slack recorded") {
    SampledFunction g;
    g.a = 2.0;
    g.b = 100.0;
    g.values.resize(512);
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        const double x = g.a + (g.b - g.a) * static_cast<double>(i) / 511.0;
        g.values[i] = 1.0 / (x * x);
    }
    const auto r = lemma1_check(g, 0.75, 50.0);
    CAPTURE(r.left, r.right, r.right - r.left);
    REQUIRE(r.left <= r.right);
}

TEST_CASE("lemma-1 inequality: randomized kernels never violate") {
    std::mt19937 rng(1905);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        SampledFunction g;
        g.a = 2.0 + 8.0 * U(rng);
        g.b = g.a + 0.5 + 15.0 * U(rng);
        g.values.resize(3 + static_cast<std::size_t>(U(rng) * 24.0));
        for (auto& v : g.values) v = -2.0 + 4.0 * U(rng);
        const double sigma = 0.55 + 1.45 * U(rng);
        const double T = 2.0 + 30.0 * U(rng);
        const auto r = lemma1_check(g, sigma, T);
        CAPTURE(trial, g.a, g.b, sigma, T, r.left, r.right);
        REQUIRE(r.left <= r.right * (1.0 + 1e-9) + 1e-12);
    }
}

TEST_CASE("inversion with a zero-length contour returns Q_4 alone") {
    MomentPolynomial p4{2, {0.1, 0.2, 0.3, 0.04, 0.005}};
    MellinLine line;
    line.sigma = 0.75;
    line.dt = 0.25;
    line.values.assign(4, cplx(0.0, 0.0));
    const auto r = mellin_invert_fourth(50.0, 0.75, 0.0, p4, line);
    REQUIRE(r.value == p4.eval_q(std::log(50.0)));
    REQUIRE(r.line_term == 0.0);
}

// --- slow suite --------------------------------------------------------------

TEST_CASE("direct transform at the documented point, X = 1e4", "[.][slow]") {
    const auto v = mellin_direct(1, cplx(3.0, 0.0), 1e4, 1e-10);
    const double simpson = oracle::simpson(
        [](double x) { return eval_abs_power(x, 1) * std::pow(x, -3.0); }, 1.0, 1e4, 5e-3);
    REQUIRE(v.value.real() == Catch::Approx(simpson).epsilon(1e-6));
}

TEST_CASE("overlap consistency at the documented point, X = 1e4", "[.][slow]") {
    const cplx s(1.5, 10.0);
    const auto cont = mellin_continued(1, s, poly1(), 1e4, table1_big(),
                                       measure_error_tail(1, poly1(), table1_big()), 1e-10);
    const cplx dirc = completed_direct(1, s, 1e4, poly1(), table1_big());
    REQUIRE(std::abs(dirc - cont.value) <= 1e-3 * std::abs(dirc));
}

TEST_CASE("mean-square scan of Z_2 on the 3/4 line", "[.][slow]") {
    const auto p4 = fit_poly2();
    const auto tail2 = measure_error_tail(2, p4, table2_big());
    const auto scan = mean_square_scan(0.75, 400.0, p4, table2_big(), tail2, 1e4, 0.5);
    REQUIRE_FALSE(scan.degenerate);
    // empty interval and monotonicity
    REQUIRE(scan.integral.front() >= 0.0);
    for (std::size_t i = 1; i < scan.integral.size(); ++i)
        REQUIRE(scan.integral[i] >= scan.integral[i - 1]);
    // one-sided: no violation of the unconditional mean-square exponent
    CAPTURE(scan.exponent, scan.bound_2_7);
    REQUIRE(scan.exponent <= scan.bound_2_7 + 0.3);
    REQUIRE(scan.bound_2_7 == Catch::Approx((10.0 - 8.0 * 0.75) / 3.0));
    REQUIRE(scan.bound_2_8 == Catch::Approx((15.0 - 12.0 * 0.75) / 5.0));
    REQUIRE(scan.bound_2_9 == Catch::Approx((7.0 - 6.0 * 0.75) / 2.0));
}

TEST_CASE("smoothed inversion reconstructs the local fourth-moment average", "[.][slow]") {
    const auto p4 = fit_poly2();
    const auto tail2 = measure_error_tail(2, p4, table2_big());
    const auto line = build_mellin_line(2, 0.75, 200.0, 0.2, p4, 1e4, table2_big(), tail2);

    // pointwise inversion on an x-grid around 50, then gaussian smoothing
    const double G = 5.0;
    const double uc = G * std::sqrt(std::log(1e16));
    const double dx = 0.25;
    const int n = static_cast<int>(2.0 * uc / dx) + 2;
    std::vector<double> inv(n);
    for (int i = 0; i < n; ++i) {
        const double x = 50.0 - uc + dx * i;
        inv[i] = mellin_invert_fourth(x, 0.75, 200.0, p4, line).value;
    }
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = -uc + dx * i;
        const double w = std::exp(-(u / G) * (u / G));
        num += inv[i] * w;
        den += w;
    }
    const double smoothed_inversion = num / den;

    // the same gaussian average of |zeta|^4 computed directly
    AdaptiveOptions opt;
    opt.abs_tol = 1e-8;
    opt.rel_tol = 1e-8;
    opt.initial_cell = 0.5;
    const double J = integrate_adaptive<double>(
                         [&](double u) {
                             return eval_abs_power(50.0 + u, 2) * std::exp(-(u / G) * (u / G));
                         },
                         -uc, uc, opt)
                         .integral /
                     (kSqrtPi * G);
    CAPTURE(smoothed_inversion, J);
    REQUIRE(std::abs(smoothed_inversion - J) <= 0.10 * J);
}
