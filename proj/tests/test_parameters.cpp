#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zetalab/collection.hpp"
#include "zetalab/lll.hpp"
#include "zetalab/rank.hpp"
#include "zetalab/relation.hpp"

using zetalab::BigInt;
using zetalab::Complex;
using zetalab::CoefficientMatrix;
using zetalab::HurwitzCollection;
using zetalab::LogSet;
using zetalab::PeriodicSequence;

namespace {
CoefficientMatrix from_rows(const std::vector<std::vector<Complex>>& rows) {
    CoefficientMatrix m;
    m.rows = rows.size();
    m.cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& row : rows)
        for (const Complex& v : row) m.entries.push_back(v);
    return m;
}
}  // namespace

TEST_CASE("build_Bj_matrix from the defining examples") {
    HurwitzCollection c;
    c.label = "t";
    c.families = {{0.5, {PeriodicSequence{{{1.0, 0.0}}},
                         PeriodicSequence{{{1.0, 0.0}, {-1.0, 0.0}}}}}};
    c.differences = zetalab::Differences::equal(1.0);
    const auto m = zetalab::build_Bj_matrix(c, 0);
    REQUIRE(m.rows == 2);
    REQUIRE(m.cols == 2);
    CHECK(m.at(0, 0) == Complex(1.0, 0.0));
    CHECK(m.at(0, 1) == Complex(1.0, 0.0));
    CHECK(m.at(1, 0) == Complex(1.0, 0.0));
    CHECK(m.at(1, 1) == Complex(-1.0, 0.0));

    HurwitzCollection single;
    single.label = "s";
    single.families = {{0.5, {PeriodicSequence{{{1.0, 0.0}}}}}};
    single.differences = zetalab::Differences::equal(1.0);
    const auto m1 = zetalab::build_Bj_matrix(single, 0);
    CHECK(m1.rows == 1);
    CHECK(m1.cols == 1);
    CHECK(m1.at(0, 0) == Complex(1.0, 0.0));

    // Rows cycle each sequence through its own period.
    HurwitzCollection cyc;
    cyc.label = "c";
    cyc.families = {{0.5, {PeriodicSequence{{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}},
                           PeriodicSequence{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}}}}}};
    cyc.differences = zetalab::Differences::equal(1.0);
    const auto m3 = zetalab::build_Bj_matrix(cyc, 0);
    REQUIRE(m3.rows == 3);
    CHECK(m3.at(0, 0) == Complex(1.0, 0.0));
    CHECK(m3.at(0, 1) == Complex(0.0, 0.0));
    CHECK(m3.at(1, 0) == Complex(0.0, 0.0));
    CHECK(m3.at(1, 1) == Complex(1.0, 0.0));
    CHECK(m3.at(2, 0) == Complex(0.0, 0.0));
    CHECK(m3.at(2, 1) == Complex(0.0, 0.0));
}

TEST_CASE("row count is the lcm of the periods") {
    HurwitzCollection c;
    c.label = "lcm";
    c.families = {{0.3, {PeriodicSequence{{{1.0, 0.0}, {2.0, 0.0}}},
                         PeriodicSequence{{{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}}}}}};
    c.differences = zetalab::Differences::equal(1.0);
    CHECK(zetalab::build_Bj_matrix(c, 0).rows == 6);
}

TEST_CASE("rank_check on the stated examples") {
    CHECK(zetalab::rank_check(from_rows({{{1, 0}, {1, 0}}, {{1, 0}, {-1, 0}}})) == 2);
    CHECK(zetalab::rank_check(from_rows({{{1, 0}, {1, 0}}, {{2, 0}, {2, 0}}})) == 1);
    // 5x3 with third column the sum of the first two.
    std::mt19937_64 rng(5);
    std::vector<std::vector<Complex>> rows(5, std::vector<Complex>(3));
    for (auto& row : rows) {
        row[0] = Complex(static_cast<double>(rng() % 9) - 4.0, 0.0);
        row[1] = Complex(static_cast<double>(rng() % 9) - 4.0, 0.0);
        row[2] = row[0] + row[1];
    }
    CHECK(zetalab::rank_check(from_rows(rows)) == 2);
}

TEST_CASE("rank matches the elimination oracle on random integer matrices") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 5;
        std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
        std::vector<std::vector<Complex>> mc(rows, std::vector<Complex>(cols));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                m[r][c] = static_cast<long long>(rng() % 7) - 3;
                mc[r][c] = Complex(static_cast<double>(m[r][c]), 0.0);
            }
        CHECK(zetalab::rank_check(from_rows(mc)) == oracles::integer_rank(m));
    }
}

TEST_CASE("rank is invariant under row permutation and column scaling") {
    std::mt19937_64 rng(31);
    std::vector<std::vector<Complex>> rows(4, std::vector<Complex>(3));
    for (auto& row : rows)
        for (auto& v : row) v = Complex(static_cast<double>(rng() % 11) - 5.0, 0.0);
    const std::size_t base = zetalab::rank_check(from_rows(rows));
    std::swap(rows[0], rows[3]);
    std::swap(rows[1], rows[2]);
    CHECK(zetalab::rank_check(from_rows(rows)) == base);
    for (auto& row : rows) row[1] *= Complex(0.0, 2.5);  // nonzero scalar
    CHECK(zetalab::rank_check(from_rows(rows)) == base);
}

TEST_CASE("log set construction") {
    HurwitzCollection c = zetalab::preset_by_label("alpha_pi");  // equal mode, h = 1
    const LogSet set = zetalab::build_log_set(c, 10, 5);
    // Primes 2,3,5,7 -> 4 entries; m = 0..5 -> 6 entries; constant.
    CHECK(set.entries.size() == 4 + 6 + 1);
    CHECK(set.entries.back().label == "two_pi_over_h");
    CHECK(set.entries.back().value == doctest::Approx(zetalab::kTwoPi));
    // Equal mode keeps prime logs unscaled.
    CHECK(set.entries[0].value == doctest::Approx(std::log(2.0)));
    CHECK(set.entries[1].value == doctest::Approx(std::log(3.0)));

    c.differences = zetalab::Differences::per_family(0.5, {2.0});
    const LogSet multi = zetalab::build_log_set(c, 10, 5);
    CHECK(multi.entries[0].value == doctest::Approx(0.5 * std::log(2.0)));
    CHECK(multi.entries.back().label == "pi");
    // log(m + alpha) entries may be negative (m = 0, alpha < 1).
    CHECK(multi.entries[4].value < 0.0);
    CHECK_NOTHROW(multi.validate());
}

TEST_CASE("relation_search finds the classical relation log2+log3=log6") {
    LogSet set;
    set.entries = {zetalab::make_log_rational_entry("log2", 1.0, BigInt(2), BigInt(1)),
                   zetalab::make_log_rational_entry("log3", 1.0, BigInt(3), BigInt(1)),
                   zetalab::make_log_rational_entry("log6", 1.0, BigInt(6), BigInt(1))};
    const auto report = zetalab::relation_search(set, 3, 40, 1000);
    REQUIRE(report.found);
    REQUIRE(report.coefficients.size() == 3);
    // (1, 1, -1) up to overall sign.
    const auto& c = report.coefficients;
    CHECK(std::abs(c[0]) == 1);
    CHECK(c[0] == c[1]);
    CHECK(c[2] == -c[0]);
    CHECK(report.residual < 1e-35);
}

TEST_CASE("relation_search finds 2*log2 - log4") {
    LogSet set;
    set.entries = {zetalab::make_log_rational_entry("log2", 1.0, BigInt(2), BigInt(1)),
                   zetalab::make_log_rational_entry("log4", 1.0, BigInt(4), BigInt(1))};
    const auto report = zetalab::relation_search(set, 2, 40, 100);
    REQUIRE(report.found);
    CHECK(std::abs(report.coefficients[0]) == 2);
    CHECK(report.coefficients[1] == -report.coefficients[0] / 2);
}

TEST_CASE("independent prime logs yield found=false at high coefficient bounds") {
    LogSet set;
    set.entries = {zetalab::make_log_rational_entry("log2", 1.0, BigInt(2), BigInt(1)),
                   zetalab::make_log_rational_entry("log3", 1.0, BigInt(3), BigInt(1))};
    const auto report = zetalab::relation_search(set, 2, 50, 1000000);
    CHECK_FALSE(report.found);
}

TEST_CASE("planted relations are always detected") {
    std::mt19937_64 rng(2024);
    const std::uint32_t primes[] = {2, 3, 5, 7, 11, 13};
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 4 + rng() % 3;  // entries including the combo
        std::vector<long long> coeffs(n - 1);
        for (auto& c : coeffs) c = static_cast<long long>(rng() % 400) + 1;
        LogSet set;
        BigInt num(1), den(1);
        for (std::size_t i = 0; i < n - 1; ++i) {
            set.entries.push_back(zetalab::make_log_rational_entry(
                "log_p" + std::to_string(primes[i]), 1.0, BigInt(primes[i]), BigInt(1)));
            // Fold p^c into the combo value num/den, sign-alternating.
            BigInt power(1);
            for (long long e = 0; e < coeffs[i]; ++e) power *= BigInt(primes[i]);
            if (i % 2 == 0)
                num *= power;
            else
                den *= power;
        }
        set.entries.push_back(
            zetalab::make_log_rational_entry("combo", 1.0, num, den));
        const auto report = zetalab::relation_search(set, n, 50, 10000);
        CHECK(report.found);
        if (report.found) {
            // Verify the detected relation exactly: it must be the planted
            // one up to scaling, so the residual is tiny.
            CHECK(report.residual < 1e-40);
        }
    }
}

TEST_CASE("scaling coherence: a planted relation survives rational rescaling") {
    // h1-scaled prime logs: scaling all entries by q keeps the relation.
    for (double q : {1.0, 0.5, 2.5}) {
        LogSet set;
        set.entries = {zetalab::make_log_rational_entry("log2", q, BigInt(2), BigInt(1)),
                       zetalab::make_log_rational_entry("log3", q, BigInt(3), BigInt(1)),
                       zetalab::make_log_rational_entry("log12", q, BigInt(12), BigInt(1))};
        const auto report = zetalab::relation_search(set, 3, 40, 100);
        REQUIRE(report.found);
        // 2*log2 + log3 = log12.
        const auto& c = report.coefficients;
        CHECK(std::abs(c[2]) == 1);
        CHECK(c[0] == -2 * c[2]);
        CHECK(c[1] == -c[2]);
    }
}

TEST_CASE("equal mode with h = 2*pi yields constant element 1") {
    HurwitzCollection c = zetalab::preset_by_label("alpha_pi");
    c.differences = zetalab::Differences::equal(zetalab::kTwoPi);
    const LogSet set = zetalab::build_log_set(c, 5, 3);
    CHECK(set.entries.back().label == "two_pi_over_h");
    CHECK(set.entries.back().value == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("coefficient bound separates detection from rejection") {
    // 7*log2 - log128 = 0: invisible at max_coeff = 5, found at 10.
    LogSet set;
    set.entries = {zetalab::make_log_rational_entry("log2", 1.0, BigInt(2), BigInt(1)),
                   zetalab::make_log_rational_entry("log128", 1.0, BigInt(128), BigInt(1))};
    const auto tight = zetalab::relation_search(set, 2, 40, 5);
    CHECK_FALSE(tight.found);
    const auto wide = zetalab::relation_search(set, 2, 40, 10);
    REQUIRE(wide.found);
    CHECK(std::abs(wide.coefficients[0]) == 7);
    CHECK(std::abs(wide.coefficients[1]) == 1);
}

TEST_CASE("precision gate") {
    LogSet set;
    set.entries = {zetalab::make_log_rational_entry("log2", 1.0, BigInt(2), BigInt(1)),
                   zetalab::make_log_rational_entry("log3", 1.0, BigInt(3), BigInt(1))};
    CHECK_THROWS_AS((void)zetalab::relation_search(set, 2, 20, 100), std::invalid_argument);
    // 10^4-bound coefficients at 30 digits: not discriminable.
    CHECK_THROWS_AS((void)zetalab::relation_search(set, 2, 30, 1000000000),
                    std::invalid_argument);
}

TEST_CASE("presets pass rank checks and ship independence reports") {
    const auto all = zetalab::presets();
    REQUIRE(all.size() >= 3);
    for (const auto& preset : all) {
        for (std::size_t j = 0; j < preset.families.size(); ++j) {
            const auto matrix = zetalab::build_Bj_matrix(preset, j);
            CHECK(zetalab::rank_check(matrix) == preset.families[j].sequences.size());
        }
        const auto stored = zetalab::stored_preset_report(preset.label);
        CHECK_FALSE(stored.found);
        CHECK(stored.precision_digits == 50);
        CHECK(stored.max_coeff_bound == 10000);
    }
}

TEST_CASE("preset log sets yield no relation (re-derives the stored reports)") {
    for (const auto& preset : zetalab::presets()) {
        const auto report = zetalab::check_admissibility(preset, {});
        CHECK(report.admissible);
        CHECK_FALSE(report.relation.found);
        const auto stored = zetalab::stored_preset_report(preset.label);
        CHECK(report.relation.found == stored.found);
        CHECK(report.relation.subsets_examined == stored.subsets_examined);
    }
}
