#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "zetalab/collection.hpp"
#include "zetalab/euler_product.hpp"
#include "zetalab/moments.hpp"
#include "zetalab/smoothing.hpp"
#include "zetalab/torus.hpp"

using zetalab::CharacterIndex;
using zetalab::Complex;
using zetalab::HurwitzCollection;

namespace {
const HurwitzCollection& preset() { return zetalab::preset_by_label("alpha_pi"); }
}  // namespace

TEST_CASE("trajectory point at k = 0 is the identity") {
    const auto point = zetalab::trajectory_point(0, preset(), 20, 10);
    for (const Complex& w : point.omega1) CHECK(w == Complex(1.0, 0.0));
    for (const auto& group : point.omega2)
        for (const Complex& w : group) CHECK(w == Complex(1.0, 0.0));
}

TEST_CASE("angle arithmetic: h = pi / log 2 sends the p = 2 coordinate to -1") {
    HurwitzCollection c = preset();
    c.differences = zetalab::Differences::equal(zetalab::kPi / std::log(2.0));
    const auto point = zetalab::trajectory_point(1, c, 10, 5);
    CHECK(std::abs(point.omega1[0] - Complex(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("group action: rotate advances the trajectory") {
    auto point = zetalab::trajectory_point(0, preset(), 30, 20);
    for (std::uint64_t k = 0; k < 1000; ++k) {
        point = zetalab::rotate(point, preset());
        if (k % 100 != 99) continue;
        const auto direct = zetalab::trajectory_point(k + 1, preset(), 30, 20);
        double err = 0.0;
        for (std::size_t i = 0; i < point.omega1.size(); ++i)
            err = std::max(err, std::abs(point.omega1[i] - direct.omega1[i]));
        for (std::size_t g = 0; g < point.omega2.size(); ++g)
            for (std::size_t m = 0; m < point.omega2[g].size(); ++m)
                err = std::max(err, std::abs(point.omega2[g][m] - direct.omega2[g][m]));
        CHECK(err < 1e-10);
    }
    // Moduli stay on the unit circle.
    for (const Complex& w : point.omega1) CHECK(std::abs(std::abs(w) - 1.0) < 1e-12);
}

TEST_CASE("rotate rejects mismatched bounds") {
    const auto point = zetalab::trajectory_point(3, preset(), 10, 10);
    CHECK_THROWS_AS((void)zetalab::rotate(point, zetalab::preset_by_label("two_alphas")),
                    std::invalid_argument);
}

TEST_CASE("weyl sum: trivial character averages to one") {
    CharacterIndex trivial;
    CHECK(zetalab::weyl_sum(trivial, 1000, preset()) == Complex(1.0, 0.0));
}

TEST_CASE("weyl sum matches the geometric closed form") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 10; ++trial) {
        CharacterIndex chi;
        const std::uint32_t primes[] = {2, 3, 5, 7, 11};
        chi.prime_exponents[primes[rng() % 5]] = 1 + static_cast<int>(rng() % 3);
        chi.factor_exponents[{0, static_cast<std::uint32_t>(rng() % 8)}] =
            -2 + static_cast<int>(rng() % 5);
        if (chi.factor_exponents.begin()->second == 0) chi.factor_exponents.clear();
        const double theta = zetalab::character_angle(chi, preset());
        for (std::uint64_t N : {10ull, 137ull, 1000ull}) {
            const Complex direct = zetalab::weyl_sum(chi, N, preset());
            const Complex closed = zetalab::weyl_sum_closed_form(theta, N);
            CHECK(std::abs(direct - closed) < 1e-12);
            // Decay bound C(chi)/(N+1) with C = 1/|sin(theta/2)|.
            const double bound =
                1.0 / ((static_cast<double>(N) + 1.0) * std::abs(std::sin(theta / 2.0)));
            CHECK(std::abs(direct) <= bound * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("theta = pi alternates and vanishes at odd N") {
    HurwitzCollection c = preset();
    c.differences = zetalab::Differences::equal(zetalab::kPi / std::log(2.0));
    CharacterIndex chi;
    chi.prime_exponents[2] = 1;  // theta = h * log 2 = pi
    CHECK(std::abs(zetalab::weyl_sum(chi, 1, c)) < 1e-15);
    CHECK(std::abs(zetalab::weyl_sum(chi, 2, c) - Complex(1.0 / 3.0, 0.0)) < 1e-12);
}

TEST_CASE("star discrepancy on the stated examples") {
    CHECK(zetalab::star_discrepancy_1d({0.0, 0.5}) == doctest::Approx(0.5));
    std::vector<double> stratified;
    for (int k = 0; k < 100; ++k) stratified.push_back(k / 100.0);
    CHECK(zetalab::star_discrepancy_1d(stratified) == doctest::Approx(0.01));
    CHECK(zetalab::star_discrepancy_1d(std::vector<double>(50, 0.3)) >= 0.7);
}

TEST_CASE("binned approximation tracks the exact discrepancy") {
    std::mt19937_64 rng(8);
    std::vector<double> sample(500);
    for (double& x : sample) x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double exact = zetalab::star_discrepancy_1d(sample, true);
    const double approx = zetalab::star_discrepancy_1d(sample, false);
    CHECK(std::abs(exact - approx) < 2e-3);
}

TEST_CASE("coordinate equidistribution improves with N in every preset") {
    for (const auto& c : zetalab::presets()) {
        const double h1 = c.phi_difference();
        for (double p : {2.0, 3.0, 5.0}) {
            const double step = h1 * std::log(p) / zetalab::kTwoPi;
            double prev = 1.0;
            for (std::uint64_t N : {1000ull, 100000ull}) {
                std::vector<double> angles(N);
                for (std::uint64_t k = 0; k < N; ++k) {
                    const double a = std::fmod(static_cast<double>(k) * step, 1.0);
                    angles[k] = a < 0.0 ? a + 1.0 : a;
                }
                const double d = zetalab::star_discrepancy_1d(std::move(angles), true);
                CHECK(d < prev);
                prev = d;
            }
        }
    }
}

TEST_CASE("per-sequence collections expand to one torus factor per sequence") {
    const auto& mix = zetalab::preset_by_label("per_sequence_mix");
    const auto factors = zetalab::torus_factors(mix);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].h == 0.7);
    CHECK(factors[1].h == 1.3);
    CHECK(factors[0].alpha == factors[1].alpha);
    const auto point = zetalab::trajectory_point(5, mix, 10, 6);
    CHECK(point.omega2.size() == 2);
    // Coordinates differ between the factors because the differences do.
    CHECK(std::abs(point.omega2[0][2] - point.omega2[1][2]) > 1e-6);
}

TEST_CASE("haar sampling sanity: coordinate means shrink like 1/sqrt(count)") {
    Complex mean(0.0, 0.0);
    const std::size_t count = 4000;
    for (std::size_t i = 0; i < count; ++i) {
        const auto omega = zetalab::sample_omega(i + 1, 3, 2, 1);
        mean += omega.omega1[0];
    }
    mean /= static_cast<double>(count);
    CHECK(std::abs(mean) <= 4.0 / std::sqrt(static_cast<double>(count)));
}

TEST_CASE("compare_distributions on the degenerate single-term spec") {
    const auto spec = zetalab::unit_spec(30000);
    zetalab::CompareOptions options;
    options.shift_count = 200;
    options.mc_count = 200;
    options.n_smooth = 10;
    const auto report = zetalab::compare_distributions(preset(), spec, options);
    // phi component is the constant v1(1,n): both samples identical.
    const auto& phi = report.components.front();
    CHECK(phi.label == "phi_n");
    CHECK(std::abs(phi.mean_shift - phi.mean_mc) < 1e-14);
    CHECK(phi.second_moment_shift == doctest::Approx(phi.second_moment_mc).epsilon(1e-12));
    CHECK(phi.mean_ok);
    CHECK(phi.second_ok);
}

TEST_CASE("compare_distributions moment gates pass for the riemann spec") {
    const auto spec = zetalab::riemann_spec(30000);
    zetalab::CompareOptions options;
    options.shift_count = 2000;
    options.mc_count = 2000;
    options.n_smooth = 20;
    options.seed = 9;
    const auto report = zetalab::compare_distributions(preset(), spec, options);
    CHECK(report.all_ok);
    // First moment of the MC sample approaches the m=1 term v1(1,n).
    const double m1 = zetalab::weight_v1(1, {options.n_smooth, options.sigma0_star});
    const auto& phi = report.components.front();
    CHECK(std::abs(phi.mean_mc - Complex(m1, 0.0)) <
          options.tolerance_factor * (phi.se_mean + 1e-12));
}
