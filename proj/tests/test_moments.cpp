#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <memory>
#include <random>

#include "zetalab/moments.hpp"

#include "oracles.hpp"

using namespace zetalab;

namespace {

const CumulativeMoment& table1_small() {
    static CumulativeMoment t(1, 1200.0, PrecisionPolicy{});
    return t;
}
const CumulativeMoment& table1_big() {
    static CumulativeMoment t(1, 10100.0, PrecisionPolicy{});
    return t;
}

// ordered factorizations of p^j into k factors, counted directly
long brute_force_dk(int k, int j) {
    if (k == 1) return 1;
    long count = 0;
    for (int e = 0; e <= j; ++e) count += brute_force_dk(k - 1, j - e);
    return count;
}

} // namespace

TEST_CASE("moment integral basics") {
    REQUIRE(moment_integral(1, 0.0, 1e-6) == 0.0);
    REQUIRE(moment_integral(1, 200.0, 1e-7) > moment_integral(1, 100.0, 1e-7));
}

TEST_CASE("moment integral against the fixed-step Simpson oracle") {
    const double direct = moment_integral(1, 100.0, 1e-8);
    const double simpson = oracle::simpson(
        [](double t) { return std::norm(oracle::zeta_em(t)); }, 0.0, 100.0, 1e-3);
    REQUIRE(direct == Catch::Approx(simpson).epsilon(1e-4));
}

TEST_CASE("moment integral preconditions") {
    REQUIRE_THROWS_AS(moment_integral(7, 10.0, 1e-6), domain_error);
    REQUIRE_THROWS_AS(moment_integral(1, 10.0, 1e-9), domain_error);
    REQUIRE_THROWS_AS(moment_integral(1, 2e6, 1e-6), domain_error);
}

TEST_CASE("divisor function at prime powers") {
    REQUIRE(divisor_prime_power(2, 1) == 2);
    REQUIRE(divisor_prime_power(1, 0) == 1);
    REQUIRE(divisor_prime_power(1, 17) == 1);
    REQUIRE(divisor_prime_power(3, 2) == 6);
    for (int k = 1; k <= 6; ++k)
        for (int j = 0; j <= 8; ++j) {
            CAPTURE(k, j);
            REQUIRE(divisor_prime_power(k, j) ==
                    static_cast<std::uint64_t>(brute_force_dk(k, j)));
        }
}

TEST_CASE("moment constants: k = 1 collapses to unity") {
    const auto c = rmt_constants(1, 1000);
    REQUIRE(c.a_k == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(c.g_num == 1);
    REQUIRE(c.g_den == 1);
    REQUIRE(c.c_k == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("moment constants: k = 2 telescopes to 6/pi^2") {
    const auto c = rmt_constants(2, 10000);
    const double a2 = 6.0 / (kPi * kPi);
    // the local factor is exactly 1 - p^{-2}; the finite product differs from
    // 1/zeta(2) only by the tail over p > cutoff
    REQUIRE(c.a_k == Catch::Approx(a2).epsilon(2e-4));
    REQUIRE(c.a_k > a2);
    REQUIRE(c.g_num == 2);
    REQUIRE(c.g_den == 1);
    REQUIRE(std::abs(c.c_k - 1.0 / (2.0 * kPi * kPi)) < 1e-4);
}

TEST_CASE("moment constants: g_3 = 42 exactly") {
    const auto c = rmt_constants(3, 1000);
    REQUIRE(c.g_num == 42);
    REQUIRE(c.g_den == 1);
}

TEST_CASE("moment constants: partial products stabilize") {
    for (int k = 1; k <= 3; ++k) {
        const double c3 = rmt_constants(k, 1000).c_k;
        const double c4 = rmt_constants(k, 10000).c_k;
        CAPTURE(k);
        REQUIRE(std::abs(c4 - c3) <= 1e-3);
        REQUIRE(rmt_constants(k, 10000).tail_bound < 0.1);
    }
}

TEST_CASE("polynomial fit recovers synthetic coefficients exactly") {
    MomentPolynomial truth{1, {-0.7, 1.3}};
    std::vector<double> T, I;
    for (int i = 0; i < 9; ++i) {
        const double x = 100.0 * std::pow(10.0, i / 4.0);
        T.push_back(x);
        I.push_back(truth.main_term(x));
    }
    const auto fit = fit_moment_polynomial(1, T, I);
    REQUIRE(fit.poly.a[0] == Catch::Approx(truth.a[0]).epsilon(1e-8));
    REQUIRE(fit.poly.a[1] == Catch::Approx(truth.a[1]).epsilon(1e-8));

    const auto pinned = fit_moment_polynomial(1, T, I, 1.3);
    REQUIRE(pinned.poly.a[1] == 1.3);
    REQUIRE(pinned.poly.a[0] == Catch::Approx(-0.7).epsilon(1e-8));

    MomentPolynomial truth2{2, {0.3, -0.2, 0.05, 0.01, 0.002}};
    std::vector<double> T2, I2;
    for (int i = 0; i < 16; ++i) {
        const double x = 50.0 * std::pow(10.0, i / 7.0);
        T2.push_back(x);
        I2.push_back(truth2.main_term(x));
    }
    const auto fit2 = fit_moment_polynomial(2, T2, I2);
    for (std::size_t j = 0; j < truth2.a.size(); ++j) {
        CAPTURE(j);
        REQUIRE(fit2.poly.a[j] == Catch::Approx(truth2.a[j]).epsilon(1e-7));
    }
}

TEST_CASE("fit refuses a grid narrower than one decade, reporting conditioning") {
    std::vector<double> T, I;
    for (int i = 0; i < 9; ++i) {
        const double x = 1000.0 + 100.0 * i;
        T.push_back(x);
        I.push_back(x * std::log(x));
    }
    REQUIRE_THROWS_WITH(fit_moment_polynomial(1, T, I),
                        Catch::Matchers::ContainsSubstring("condition number"));
}

TEST_CASE("Q-coefficient identity q_j = a_j + (j+1) a_{j+1}") {
    MomentPolynomial p{2, {1.5, -2.0, 0.25, 3.0, 0.125}};
    const auto q = p.q_coeffs();
    REQUIRE(q.size() == 5);
    REQUIRE(q[0] == 1.5 + 1.0 * -2.0);
    REQUIRE(q[1] == -2.0 + 2.0 * 0.25);
    REQUIRE(q[2] == 0.25 + 3.0 * 3.0);
    REQUIRE(q[3] == 3.0 + 4.0 * 0.125);
    REQUIRE(q[4] == 0.125);
    REQUIRE(p.eval_q(2.0) == Catch::Approx(p.eval(2.0) + p.eval_derivative(2.0)).epsilon(1e-14));
}

TEST_CASE("pole expansion coefficients from the polynomial") {
    MomentPolynomial p{1, {-0.5, 2.0}};
    const auto pe = PoleExpansion::from_polynomial(p);
    REQUIRE(pe.order() == 2);
    REQUIRE(pe.coeff[1] == 2.0 * 1.0);              // a_1 * 1!
    REQUIRE(pe.coeff[0] == -0.5 * 1.0 + 2.0 * 1.0); // a_0 0! + a_1 1!
}

TEST_CASE("error term decomposition is exact and obeys the T < 1 convention") {
    const auto poly = MomentPolynomial::classical_second_moment();
    const auto& tab = table1_small();
    const auto r = error_term(1, 800.0, poly, tab);
    REQUIRE(r.integral == r.main_term + r.error); // identity by construction
    REQUIRE(r.integral >= 0.0);
    const auto r0 = error_term(1, 0.0, poly, tab);
    REQUIRE(r0.error == 0.0);
    REQUIRE(r0.main_term == 0.0);
}

TEST_CASE("cumulative table: non-decreasing, continuous, consistent with quadrature") {
    const auto& tab = table1_small();
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> U(0.0, 1150.0);
    for (int i = 0; i < 200; ++i) {
        const double a = U(rng), b = U(rng);
        REQUIRE(tab.value(std::max(a, b)) >= tab.value(std::min(a, b)));
    }
    for (double t : {13.0, 401.737, 997.25}) {
        const double f = tab.integrand(t);
        const double jump = std::abs(tab.value(t + 1e-4) - tab.value(t));
        REQUIRE(jump <= (f + 1.0) * 1e-4 * 3.0);
    }
    const double direct = moment_integral(1, 750.0, 1e-8);
    REQUIRE(tab.value(750.0) == Catch::Approx(direct).epsilon(1e-7));
}

TEST_CASE("mean-square exponent fitter on synthetic profiles") {
    std::vector<double> grid;
    for (int i = 0; i <= 12; ++i) grid.push_back(1000.0 * std::pow(10.0, i / 12.0));

    const auto quarter = mean_square_exponent([](double t) { return std::pow(t, 0.25); }, grid);
    REQUIRE_FALSE(quarter.degenerate);
    REQUIRE(quarter.slope == Catch::Approx(1.5).margin(1e-3));

    const auto zero = mean_square_exponent([](double) { return 0.0; }, grid);
    REQUIRE(zero.degenerate);
}

TEST_CASE("CSV table emission") {
    std::vector<MomentResult> rows{{1, 10.0, 25.5, 24.0, 1.5, 1e-9}};
    write_moment_csv("moment_test.csv", rows);
    std::ifstream in("moment_test.csv");
    std::string header, line;
    std::getline(in, header);
    std::getline(in, line);
    REQUIRE(header == "T,I,main,E");
    REQUIRE(line == "10,25.5,24,1.5");
}

// --- slow suite: fits on computed data up to T = 1e4 ------------------------

TEST_CASE("second-moment fit lands on the classical coefficients", "[.][slow]") {
    const auto& tab = table1_big();
    std::vector<double> T, I;
    for (int i = 0; i <= 14; ++i) {
        T.push_back(1000.0 * std::pow(10.0, i / 14.0));
        I.push_back(tab.value(T.back()));
    }
    const auto fit = fit_moment_polynomial(1, T, I);
    CAPTURE(fit.condition, fit.max_rel_residual);
    REQUIRE(fit.poly.a[1] > 0.95);
    REQUIRE(fit.poly.a[1] < 1.05);
    REQUIRE(std::abs(fit.poly.a[0] - (2.0 * kEulerGamma - 1.0 - kLog2Pi)) < 0.1);
}

TEST_CASE("error-term size and mean-square growth for k = 1", "[.][slow]") {
    const auto poly = MomentPolynomial::classical_second_moment();
    const auto& tab = table1_big();
    const auto r = error_term(1, 5000.0, poly, tab);
    REQUIRE(std::abs(r.error) / 5000.0 <= 0.05);

    // The decade [1e3, 1e4] sits above the asymptotic 3/2 by a slowly decaying
    // amount; the measured value there is ~1.64 and keeps falling with height
    // (1.599 on [3e3, 3e4], 1.590 on [4e3, 4e4]; see the acceptance suite).
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(1000.0 * std::pow(10.0, i / 10.0));
    const auto fit = error_mean_square_exponent(1, grid, poly, tab);
    REQUIRE_FALSE(fit.degenerate);
    CAPTURE(fit.slope);
    REQUIRE(fit.slope >= 1.55);
    REQUIRE(fit.slope <= 1.72);
}

TEST_CASE("reported log-power of the second moment is sane", "[.][slow]") {
    const auto& tab = table1_big();
    std::vector<double> T, I;
    for (int i = 0; i <= 10; ++i) {
        T.push_back(500.0 * std::pow(10.0, i / 8.0));
        I.push_back(tab.value(T.back()));
    }
    const auto fit = fitted_log_power(T, I);
    REQUIRE_FALSE(fit.degenerate);
    REQUIRE(fit.slope > 0.5);
    REQUIRE(fit.slope < 4.0);
}
