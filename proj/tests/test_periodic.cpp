#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zetalab/hurwitz.hpp"
#include "zetalab/periodic.hpp"

using zetalab::Complex;
using zetalab::PeriodicSequence;

TEST_CASE("residue_b") {
    CHECK(zetalab::residue_b({{{1.0, 0.0}, {-1.0, 0.0}}}) == Complex(0.0, 0.0));
    CHECK(zetalab::residue_b({{{1.0, 0.0}}}) == Complex(1.0, 0.0));
    CHECK(zetalab::residue_b({{{2.0, 1.0}, {4.0, -1.0}, {0.0, 0.0}}}) == Complex(2.0, 0.0));
}

TEST_CASE("residue_b is linear") {
    // Dyadic entries and a power-of-two period keep every step exact.
    const PeriodicSequence a{{{1.0, 2.0}, {3.0, -1.0}, {0.0, 0.5}, {2.0, 0.25}}};
    const PeriodicSequence b{{{-2.0, 0.0}, {1.0, 1.0}, {4.0, 4.0}, {0.5, -8.0}}};
    const Complex u(2.0, -1.0), v(0.5, 3.0);
    PeriodicSequence mix;
    for (std::size_t i = 0; i < 4; ++i) mix.coeffs.push_back(u * a.coeffs[i] + v * b.coeffs[i]);
    CHECK(zetalab::residue_b(mix) ==
          u * zetalab::residue_b(a) + v * zetalab::residue_b(b));
}

TEST_CASE("sequence validation") {
    CHECK_THROWS_AS(PeriodicSequence{{}}.validate(), std::invalid_argument);
    CHECK_THROWS_AS((PeriodicSequence{{{0.0, 0.0}, {0.0, 0.0}}}).validate(),
                    std::invalid_argument);
    // (1, -1, 1, -1) has minimal period 2, not 4.
    CHECK_THROWS_AS(
        (PeriodicSequence{{{1.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}}}).validate(),
        std::invalid_argument);
    CHECK_NOTHROW((PeriodicSequence{{{1.0, 0.0}, {-1.0, 0.0}}}).validate());
}

TEST_CASE("reduction identity: constant-one sequence gives hurwitz_zeta") {
    const PeriodicSequence ones = zetalab::constant_one_sequence();
    for (double sigma : {0.6, 1.1, 2.0, 3.0}) {
        for (double t : {0.0, -4.0, 17.5, 30.0}) {
            if (sigma == 1.0 && t == 0.0) continue;
            const Complex s(sigma, t);
            CHECK(std::abs(zetalab::periodic_hurwitz_zeta(s, 1.0, ones) -
                           zetalab::hurwitz_zeta(s, 1.0)) < 1e-12);
        }
    }
}

TEST_CASE("alternating series against the direct oracle") {
    const PeriodicSequence alt{{{1.0, 0.0}, {-1.0, 0.0}}};
    const Complex s(2.0, 0.0);
    const Complex expected = oracles::periodic_direct(s, 0.5, alt.coeffs);
    CHECK(std::abs(zetalab::periodic_hurwitz_zeta(s, 0.5, alt) - expected) < 1e-10);
}

TEST_CASE("entire case at s = 1 does not raise and is finite") {
    const PeriodicSequence alt{{{1.0, 0.0}, {-1.0, 0.0}}};
    const Complex value = zetalab::periodic_hurwitz_zeta({1.0, 0.0}, 1.0 / 3.0, alt);
    CHECK(std::isfinite(value.real()));
    CHECK(std::isfinite(value.imag()));
    // Oracle: conditionally convergent direct sum in pairs.
    long double direct = 0.0L;
    for (long m = 0; m < 4000000; m += 2)
        direct += 1.0L / (m + 1.0L / 3.0L) - 1.0L / (m + 1.0L + 1.0L / 3.0L);
    CHECK(std::abs(value - Complex(static_cast<double>(direct), 0.0)) < 1e-6);
}

TEST_CASE("pole error only when the residue is nonzero") {
    const PeriodicSequence ones = zetalab::constant_one_sequence();
    CHECK_THROWS_AS((void)zetalab::periodic_hurwitz_zeta({1.0, 0.0}, 0.5, ones),
                    zetalab::PoleError);
}

TEST_CASE("period-decomposition consistency: doubled period agrees") {
    // Evaluate (1,-1) also as the 4-periodic repeat (1,-1,1,-1); the
    // evaluator must agree even though the repeat is not minimal (the
    // minimality check is bypassed by constructing the value directly).
    const PeriodicSequence alt{{{1.0, 0.0}, {-1.0, 0.0}}};
    PeriodicSequence doubled;
    doubled.coeffs = {{1.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}};
    for (double sigma : {0.7, 1.4, 2.5}) {
        for (double t : {0.0, 9.0, -21.0}) {
            const Complex s(sigma, t);
            for (double alpha : {1.0 / 3.0, 0.5, 0.9}) {
                CHECK(std::abs(zetalab::periodic_hurwitz_zeta(s, alpha, alt) -
                               zetalab::periodic_hurwitz_zeta(s, alpha, doubled)) < 1e-10);
            }
        }
    }
}

TEST_CASE("conjugation symmetry for real sequences") {
    const PeriodicSequence seq{{{2.0, 0.0}, {-1.0, 0.0}, {0.5, 0.0}}};
    for (double t : {3.0, 12.0}) {
        const Complex up = zetalab::periodic_hurwitz_zeta({0.75, t}, 0.4, seq);
        const Complex down = zetalab::periodic_hurwitz_zeta({0.75, -t}, 0.4, seq);
        CHECK(std::abs(up - std::conj(down)) < 1e-12);
    }
}
