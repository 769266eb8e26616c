#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zetalab/hurwitz.hpp"
#include "zetalab/mean_value.hpp"

using zetalab::Complex;

TEST_CASE("constant evaluator has unit mean square") {
    const auto one = [](Complex) { return Complex(1.0, 0.0); };
    CHECK(zetalab::mean_square_on_line(one, 0.5, 10.0, 100) == doctest::Approx(1.0));
    CHECK(zetalab::mean_square_on_line(one, 0.5, 4000.0, 100) == doctest::Approx(1.0));
}

TEST_CASE("2^{-s} on the half line has mean square 1/2") {
    const auto two = [](Complex s) { return std::exp(-s * std::log(2.0)); };
    CHECK(zetalab::mean_square_on_line(two, 0.5, 100.0, 500) == doctest::Approx(0.5));
}

TEST_CASE("zeta mean square near zeta(3/2) at moderate height") {
    // Classical asymptotic (1/T) int_0^T |zeta(3/4+it)|^2 dt -> zeta(3/2);
    // partial-sum oracle for the constant.
    double zeta_32 = 0.0;
    for (int n = 1; n < 200000; ++n) zeta_32 += std::pow(n, -1.5);
    zeta_32 += 2.0 / std::sqrt(199999.5);  // integral tail
    const auto zeta = [](Complex s) { return zetalab::hurwitz_zeta(s, 1.0); };
    const double mean = zetalab::mean_square_on_line(zeta, 0.75, 800.0, 8000);
    CHECK(mean == doctest::Approx(zeta_32).epsilon(0.10));
}

TEST_CASE("diagnostics flag unresolved oscillation") {
    // One panel per 40 units of t grossly under-resolves 2^{-it}.
    const auto two = [](Complex s) { return std::exp(-s * std::log(2.0)) + 1.0; };
    zetalab::MeanSquareDiagnostics diag;
    (void)zetalab::mean_square_on_line(two, 0.5, 4000.0, 100, &diag);
    CHECK(diag.resolution_warning);
    zetalab::MeanSquareDiagnostics fine;
    (void)zetalab::mean_square_on_line(two, 0.5, 10.0, 2000, &fine);
    CHECK_FALSE(fine.resolution_warning);
}

TEST_CASE("argument validation") {
    const auto one = [](Complex) { return Complex(1.0, 0.0); };
    CHECK_THROWS_AS((void)zetalab::mean_square_on_line(one, 0.5, 10.0, 50),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)zetalab::mean_square_on_line(one, 0.5, -1.0, 200),
                    std::invalid_argument);
}
