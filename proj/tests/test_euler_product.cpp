#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zetalab/euler_product.hpp"
#include "zetalab/hurwitz.hpp"
#include "zetalab/primes.hpp"

using zetalab::Complex;
using zetalab::DirichletSumMode;
using zetalab::EulerProductMode;

TEST_CASE("riemann spec has unit coefficients") {
    const auto spec = zetalab::riemann_spec(100);
    const auto coeffs = zetalab::dirichlet_coefficients(spec, 6);
    for (std::size_t k = 1; k <= 6; ++k) CHECK(coeffs.at(k) == Complex(1.0, 0.0));
}

TEST_CASE("zero local coefficients give the constant function") {
    const auto spec = zetalab::unit_spec(50);
    const auto coeffs = zetalab::dirichlet_coefficients(spec, 12);
    CHECK(coeffs.at(1) == Complex(1.0, 0.0));
    for (std::size_t k = 2; k <= 12; ++k) CHECK(coeffs.at(k) == Complex(0.0, 0.0));
}

TEST_CASE("two-factor local spec expands (1-x)^-2: c_p = 2, c_p2 = 3") {
    const auto spec = zetalab::zeta_squared_spec(50);
    const auto coeffs = zetalab::dirichlet_coefficients(spec, 49);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        CHECK(coeffs.at(p) == Complex(2.0, 0.0));
        if (p * p <= 49) CHECK(coeffs.at(p * p) == Complex(3.0, 0.0));
    }
    // Multiplicativity across distinct primes: c_6 = c_2 * c_3 = 4.
    CHECK(coeffs.at(6) == Complex(4.0, 0.0));
    // Divisor function: c_12 = d(12) = 6.
    CHECK(coeffs.at(12) == Complex(6.0, 0.0));
}

TEST_CASE("growth-shift: coefficients are scaled by k^{-(alpha+beta)}") {
    auto spec = zetalab::riemann_spec(50);
    spec.growth_alpha = 0.25;
    spec.growth_beta = 0.5;
    const auto coeffs = zetalab::dirichlet_coefficients(spec, 10);
    CHECK(std::abs(coeffs.at(4) - Complex(std::pow(4.0, -0.75), 0.0)) < 1e-15);
}

TEST_CASE("matsumoto_eval agrees with the continued zeta") {
    const auto spec = zetalab::riemann_spec(100000);
    // Product truncation tail at sigma = 2 is sum_{p > 1e5} p^{-2} ~ 9e-7.
    const Complex via_product =
        zetalab::matsumoto_eval(spec, {2.0, 0.0}, EulerProductMode{100000});
    CHECK(std::abs(via_product - zetalab::hurwitz_zeta({2.0, 0.0}, 1.0)) < 2e-6);
    const Complex via_sum = zetalab::matsumoto_eval(spec, {3.0, 0.0}, DirichletSumMode{10000});
    CHECK(std::abs(via_sum - zetalab::hurwitz_zeta({3.0, 0.0}, 1.0)) < 1e-8);
}

TEST_CASE("euler product and dirichlet sum agree in the convergence region") {
    const auto spec = zetalab::riemann_spec(100000);
    for (double sigma : {2.0, 2.5, 3.0}) {
        for (double t : {0.0, 5.0, -11.0}) {
            const Complex s(sigma, t);
            const Complex a = zetalab::matsumoto_eval(spec, s, EulerProductMode{100000});
            const Complex b = zetalab::matsumoto_eval(spec, s, DirichletSumMode{100000});
            // The gap is dominated by the Dirichlet tail K^{1-sigma}/(sigma-1):
            // ~1e-5 at sigma = 2, below 1e-6 from sigma = 2.5 on.
            CHECK(std::abs(a - b) < (sigma <= 2.0 ? 2e-5 : 1e-6));
        }
    }
}

TEST_CASE("dominant term at large sigma") {
    const auto spec = zetalab::zeta_squared_spec(100);
    const Complex v = zetalab::matsumoto_eval(spec, {30.0, 0.0}, DirichletSumMode{100});
    CHECK(std::abs(v - Complex(1.0, 0.0)) < 1e-8);
}

TEST_CASE("convergence errors") {
    const auto spec = zetalab::riemann_spec(100);
    CHECK_THROWS_AS(
        (void)zetalab::matsumoto_eval(spec, {0.9, 0.0}, EulerProductMode{100}),
        zetalab::ConvergenceError);
    CHECK_THROWS_AS((void)zetalab::dirichlet_coefficients(spec, 200),
                    zetalab::ConvergenceError);
}

TEST_CASE("steuding kappa") {
    const auto riemann = zetalab::riemann_spec(10000);
    const auto coeffs = zetalab::dirichlet_coefficients(riemann, 10000);
    CHECK(zetalab::steuding_kappa(coeffs, riemann, 100.0) == 1.0);
    CHECK(zetalab::steuding_kappa(coeffs, riemann, 10000.0) == 1.0);

    const auto zero = zetalab::unit_spec(200);
    const auto zero_coeffs = zetalab::dirichlet_coefficients(zero, 200);
    CHECK(zetalab::steuding_kappa(zero_coeffs, zero, 200.0) == 0.0);

    // |a(p)|^2 = 4 at every prime; pi(100) = 25 is the direct count.
    const auto sq = zetalab::zeta_squared_spec(200);
    const auto sq_coeffs = zetalab::dirichlet_coefficients(sq, 200);
    CHECK(zetalab::prime_count(100) == 25);
    CHECK(zetalab::steuding_kappa(sq_coeffs, sq, 100.0) == 4.0);
}

TEST_CASE("conjugation symmetry for real-coefficient specs") {
    const auto spec = zetalab::zeta_squared_spec(2000);
    for (double t : {3.0, 11.0}) {
        const Complex up = zetalab::matsumoto_eval(spec, {2.2, t}, EulerProductMode{2000});
        const Complex down = zetalab::matsumoto_eval(spec, {2.2, -t}, EulerProductMode{2000});
        CHECK(std::abs(up - std::conj(down)) < 1e-12);
        const Complex sum_up = zetalab::matsumoto_eval(spec, {2.2, t}, DirichletSumMode{2000});
        const Complex sum_down = zetalab::matsumoto_eval(spec, {2.2, -t}, DirichletSumMode{2000});
        CHECK(std::abs(sum_up - std::conj(sum_down)) < 1e-12);
    }
}

TEST_CASE("spec validation enforces the growth bounds") {
    zetalab::EulerProductSpec bad;
    bad.label = "bad";
    bad.growth_beta = 0.0;
    bad.local_factors.push_back({2, {{Complex(3.0, 0.0), 1}}});  // |a| > 2^0
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    zetalab::EulerProductSpec degree;
    degree.label = "bad_degree";
    degree.c1 = 1.0;
    degree.growth_alpha = 0.0;
    degree.local_factors.push_back(
        {2, {{Complex(1.0, 0.0), 1}, {Complex(1.0, 0.0), 1}}});  // g = 2 > 1 * 2^0
    CHECK_THROWS_AS(degree.validate(), std::invalid_argument);
}
