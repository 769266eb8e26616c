#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zetalab/hurwitz.hpp"
#include "zetalab/types.hpp"

using zetalab::Complex;
using zetalab::hurwitz_zeta;

TEST_CASE("hurwitz_zeta at classical points") {
    // zeta(2) = pi^2/6; frozen from the direct-summation oracle.
    CHECK(std::abs(hurwitz_zeta({2.0, 0.0}, 1.0) - Complex(1.6449340668482264, 0.0)) < 1e-12);
    // zeta(2, 1/2) = pi^2/2.
    CHECK(std::abs(hurwitz_zeta({2.0, 0.0}, 0.5) - Complex(4.9348022005446793, 0.0)) < 1e-12);
    CHECK(std::abs(hurwitz_zeta({3.0, 0.0}, 1.0) - Complex(1.2020569031595943, 0.0)) < 1e-12);
}

TEST_CASE("hurwitz_zeta dominant-term asymptotics at large sigma") {
    const Complex v = hurwitz_zeta({50.0, 0.0}, 1.0 / 3.0);
    const double lead = std::pow(3.0, 50.0);
    CHECK(std::abs(v.real() / lead - 1.0) < 1e-10);
    CHECK(v.imag() == 0.0);
}

TEST_CASE("hurwitz_zeta matches the brute-force oracle on a grid") {
    const double alphas[] = {1.0 / 3.0, 0.5, 1.0 / zetalab::kPi, 0.99};
    for (double a : alphas) {
        for (double sigma : {0.6, 1.3, 2.2, 3.0}) {
            for (double t : {0.0, 4.5, -17.0, 50.0}) {
                if (sigma == 1.0 && t == 0.0) continue;
                const Complex s(sigma, t);
                const Complex expected = oracles::hurwitz_direct(s, a, 200000);
                CHECK(std::abs(hurwitz_zeta(s, a) - expected) < 2e-9);
            }
        }
    }
}

TEST_CASE("hurwitz_zeta error paths") {
    CHECK_THROWS_AS((void)hurwitz_zeta({1.0, 0.0}, 0.5), zetalab::PoleError);
    CHECK_THROWS_AS((void)hurwitz_zeta({2.0, 0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)hurwitz_zeta({2.0, 0.0}, 1.5), std::invalid_argument);
    CHECK_THROWS_AS((void)hurwitz_zeta({2.0, 0.0}, -0.25), std::invalid_argument);
    // Near-pole evaluation stays finite and accurate: zeta(s) = 1/(s-1) +
    // gamma + O(s-1), with the pole offset taken in rounded arithmetic.
    const double s_re = 1.0 + 1e-7;
    const Complex near = hurwitz_zeta({s_re, 0.0}, 1.0);
    CHECK(std::abs(near - (1.0 / (s_re - 1.0) + 0.5772156649015329)) < 1e-5);
}

TEST_CASE("conjugation symmetry") {
    for (double a : {0.25, 1.0 / 3.0, 0.8, 1.0}) {
        for (double t : {1.0, 7.7, 23.0}) {
            const Complex up = hurwitz_zeta({0.8, t}, a);
            const Complex down = hurwitz_zeta({0.8, -t}, a);
            CHECK(std::abs(up - std::conj(down)) < 1e-12);
        }
    }
}
