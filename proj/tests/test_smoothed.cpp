#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "zetalab/moments.hpp"
#include "zetalab/smoothed.hpp"

#include "oracles.hpp"

using namespace zetalab;

namespace {

const FineTable& fine1() {
    static FineTable t = build_fine_table(1, 1100.0, PrecisionPolicy{}, "zetalab-test-cache/fine");
    return t;
}
const FineTable& fine2() {
    static FineTable t = build_fine_table(2, 900.0, PrecisionPolicy{}, "zetalab-test-cache/fine");
    return t;
}

FineTable constant_table(double c, double t_max, double dt = 0.0125) {
    FineTable ft;
    ft.k = 1;
    ft.dt = dt;
    ft.t_max = t_max;
    const auto n = static_cast<std::size_t>(t_max / dt) + 1;
    ft.f.assign(n, c);
    ft.prefix.resize(n);
    for (std::size_t i = 0; i < n; ++i) ft.prefix[i] = c * dt * static_cast<double>(i);
    return ft;
}

const MomentPolynomial& poly4() {
    static MomentPolynomial p = [] {
        static CumulativeMoment tab(2, 2100.0, PrecisionPolicy{});
        std::vector<double> T, I;
        for (int i = 0; i <= 16; ++i) {
            T.push_back(150.0 * std::pow(2000.0 / 150.0, i / 16.0));
            I.push_back(tab.value(T.back()));
        }
        return fit_moment_polynomial(2, T, I).poly;
    }();
    return p;
}

} // namespace

TEST_CASE("gaussian weight normalization: a constant smooths to itself") {
    const auto ft = constant_table(3.7, 400.0);
    for (double G : {0.1, 1.0, 5.0, 20.0}) {
        const auto j = smoothed_moment(200.0, G, 1, ft);
        CAPTURE(G);
        REQUIRE(j.value == Catch::Approx(3.7).margin(3.7e-8));
        REQUIRE(j.truncation_u == Catch::Approx(G * std::sqrt(std::log(1e16))));
    }
    // wide-window route as well
    const auto wide = smoothed_moment(200.0, 12.0, 1, ft);
    REQUIRE(wide.value == Catch::Approx(3.7).margin(3.7e-8));
}

TEST_CASE("smoothed moment stays between the window extremes") {
    const auto& ft = fine1();
    for (double x : {100.0, 431.7, 800.0}) {
        for (double G : {0.5, 2.0, 8.0}) {
            const auto j = smoothed_moment(x, G, 1, ft);
            double lo = 1e300, hi = -1e300;
            for (double t = x - j.truncation_u; t <= x + j.truncation_u; t += ft.dt) {
                lo = std::min(lo, ft.at(t));
                hi = std::max(hi, ft.at(t));
            }
            CAPTURE(x, G);
            REQUIRE(j.value >= lo - 1e-9);
            REQUIRE(j.value <= hi + 1e-9);
            REQUIRE(j.value >= 0.0);
        }
    }
}

TEST_CASE("domain guard at the left end and the reflected path") {
    REQUIRE_THROWS_AS(smoothed_moment(0.5, 1.0, 1, fine1()), domain_error);
    // the reflected average is finite and symmetric around 0
    const double a = smoothed_moment_reflected(0.5, 1.0, fine1());
    const double b = smoothed_moment_reflected(-0.5, 1.0, fine1());
    REQUIRE(a == Catch::Approx(b).epsilon(1e-12));
}

TEST_CASE("narrow width against the weighted local-average oracle") {
    const double x = 1000.0, G = 0.1;
    const auto j = smoothed_moment(x, G, 1, fine1());
    // independent oracle: Simpson over the +-0.3 window with the same weight,
    // normalized by the weight mass over that window
    const double num = oracle::simpson(
        [&](double u) { return eval_abs_power(x + u, 1) * std::exp(-(u / G) * (u / G)); },
        -0.3, 0.3, 1e-4);
    const double den = oracle::simpson(
        [&](double u) { return std::exp(-(u / G) * (u / G)); }, -0.3, 0.3, 1e-4);
    REQUIRE(j.value == Catch::Approx(num / den).epsilon(0.05));
}

TEST_CASE("smoothed moment approaches the pointwise value as G shrinks") {
    const double x = 1000.0;
    const double f = eval_abs_power(x, 1);
    double prev = 1e300;
    for (double G : {1.0, 0.3, 0.1}) {
        const double delta = std::abs(smoothed_moment(x, G, 1, fine1()).value - f);
        CAPTURE(G, delta);
        REQUIRE(delta < prev);
        prev = delta;
    }
}

TEST_CASE("smoothed fourth moment against the flat window value, factor recorded") {
    const double x = 500.0, G = 10.0;
    static CumulativeMoment tab2(2, 900.0, PrecisionPolicy{});
    const auto j = smoothed_moment(x, G, 2, fine2());
    const double flat = tab2.interval(x - G, x + G) / (2.0 * G);
    const double factor = j.value / flat;
    CAPTURE(j.value, flat, factor);
    REQUIRE(factor > 0.2);
    REQUIRE(factor < 5.0);
}

TEST_CASE("decomposition derivative term on synthetic error profiles") {
    // E = 0: the term vanishes
    REQUIRE(decomposition_derivative_term(50.0, 3.0, [](double) { return 0.0; }) == 0.0);
    // E(t) = t: the term is exactly 1 (second gaussian moment)
    const double lin = decomposition_derivative_term(50.0, 3.0, [](double t) { return t; });
    REQUIRE(lin == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("j-table interpolation and the smoothed transform oracle") {
    const auto jt = build_j_table(0.5, 220.0, fine2());
    // interpolation is consistent with direct evaluation off the nodes
    for (double x : {7.3, 55.55, 180.2}) {
        const double direct = smoothed_moment_reflected(x, std::pow(x, 0.5), fine2());
        CAPTURE(x);
        REQUIRE(jt.at(x) == Catch::Approx(direct).epsilon(2e-4));
    }

    const auto v = z_xi(cplx(3.0, 0.0), 0.5, 100.0, fine2(), 1e-9);
    const double simpson = oracle::simpson(
        [&](double x) {
            return smoothed_moment_reflected(x, std::pow(x, 0.5), fine2()) * std::pow(x, -3.0);
        },
        1.0, 100.0, 0.02);
    REQUIRE(v.value.real() == Catch::Approx(simpson).epsilon(1e-5));
    REQUIRE(std::abs(v.value.imag()) <= 1e-10 * std::abs(v.value.real()));
    REQUIRE(v.tail_bound > 0.0);
}

TEST_CASE("z_xi majorant: averaging order exchanged over the same integrand") {
    // |Z_xi(s)| <= int |zeta|^4(v) W(v) dv with the weight collected by
    // switching the order of the gaussian average and the x-integral
    const double sig = 2.5, xi = 1.0, X = 100.0;
    static FineTable f2w = build_fine_table(2, 720.0, PrecisionPolicy{},
                                            "zetalab-test-cache/fine");
    const auto v = z_xi(cplx(sig, 0.0), xi, X, f2w, 1e-8);
    // W(v) = int_1^X (1/(sqrt(pi) x)) [e^{-((v-x)/x)^2} + e^{-((v+x)/x)^2}] x^{-sig} dx
    AdaptiveOptions wopt;
    wopt.abs_tol = 1e-10;
    wopt.rel_tol = 1e-8;
    wopt.initial_cell = 1.0;
    auto W = [&](double vv) {
        return integrate_adaptive<double>(
                   [&](double x) {
                       const double a = (vv - x) / x, b = (vv + x) / x;
                       return (std::exp(-a * a) + std::exp(-b * b)) / (kSqrtPi * x) *
                              std::pow(x, -sig);
                   },
                   1.0, X, wopt)
            .integral;
    };
    AdaptiveOptions mopt;
    mopt.abs_tol = 1e-8;
    mopt.rel_tol = 1e-6;
    mopt.initial_cell = 0.5;
    mopt.max_cell_at = [](double t) { return zeta_cell_width(t); };
    const double majorant = integrate_adaptive<double>(
                                [&](double t) { return f2w.at(t) * W(t); }, 0.0, 7.0 * X, mopt)
                                .integral;
    CAPTURE(std::abs(v.value), majorant);
    REQUIRE(std::abs(v.value) <= majorant * (1.0 + 1e-6));
}

TEST_CASE("z_xi preconditions") {
    REQUIRE_THROWS_AS(z_xi(cplx(0.9, 0.0), 0.5, 50.0, fine2()), domain_error);
    REQUIRE_THROWS_AS(z_xi(cplx(3.0, 0.0), 0.25, 50.0, fine2()), domain_error);
}

// --- slow suite --------------------------------------------------------------

TEST_CASE("decomposition identity on computed data at x = 2000", "[.][slow]") {
    static CumulativeMoment tab2(2, 10100.0, PrecisionPolicy{});
    static FineTable f2 = build_fine_table(2, 2400.0, PrecisionPolicy{}, "zetalab-test-cache/fine");
    std::vector<double> T, I;
    for (int i = 0; i <= 16; ++i) {
        T.push_back(500.0 * std::pow(20.0, i / 16.0));
        I.push_back(tab2.value(T.back()));
    }
    const auto p4 = fit_moment_polynomial(2, T, I).poly;
    const auto chk = smoothed_decomposition_check(2000.0, 0.5, p4, tab2, f2);
    CAPTURE(chk.j_value, chk.smoothed_q4, chk.derivative_term, chk.residual);
    REQUIRE(std::abs(chk.residual) <= 1e-3 * std::abs(chk.j_value));
}

TEST_CASE("growth scan of Z_xi on the sigma = 1 and sigma = 3/4 lines", "[.][slow]") {
    static FineTable f2big = build_fine_table(2, 1900.0, PrecisionPolicy{},
                                              "zetalab-test-cache/fine");
    const auto jt = build_j_table(0.5, 1650.0, f2big);
    std::vector<double> heights{50.0, 71.0, 100.0, 141.0, 200.0, 282.0, 400.0};

    const auto flat = theorem3_scan(1.0, 0.5, heights, jt, poly4());
    CAPTURE(flat.exponent);
    REQUIRE_FALSE(flat.degenerate);
    REQUIRE_FALSE(flat.violated);
    REQUIRE(std::abs(flat.exponent) <= flat.bound);

    const auto mid = theorem3_scan(0.75, 0.5, heights, jt, poly4());
    CAPTURE(mid.exponent);
    REQUIRE_FALSE(mid.violated);
    REQUIRE(mid.exponent <= 0.55);
}

TEST_CASE("growth scan at the xi range endpoints", "[.][slow]") {
    // xi = 1 smooths with G = x, so the table must reach ~7x the cap
    static FineTable f2wide = build_fine_table(2, 5700.0, PrecisionPolicy{},
                                               "zetalab-test-cache/fine");
    std::vector<double> heights{40.0, 64.0, 100.0, 160.0};
    for (double xi : {1.0 / 3.0, 1.0}) {
        const double cap = 800.0;
        const auto jt = build_j_table(xi, cap, f2wide);
        const auto scan = theorem3_scan(0.75, xi, heights, jt, poly4());
        CAPTURE(xi, scan.exponent, scan.bound);
        REQUIRE_FALSE(scan.violated);
    }
}
