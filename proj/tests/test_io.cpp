#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetalab/io.hpp"

using zetalab::Complex;
using zetalab::Json;

TEST_CASE("complex encoding") {
    CHECK(zetalab::complex_to_json(Complex(1.5, 0.0)).is_number());
    CHECK(zetalab::complex_from_json(Json(2.0)) == Complex(2.0, 0.0));
    CHECK(zetalab::complex_from_json(Json::array({1.0, -2.0})) == Complex(1.0, -2.0));
    CHECK_THROWS_AS((void)zetalab::complex_from_json(Json("x")), std::invalid_argument);
}

TEST_CASE("sequence round trip and validation") {
    const zetalab::PeriodicSequence seq{{{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}}};
    const auto j = zetalab::to_json(seq);
    CHECK(j.at("period") == 3);
    const auto back = zetalab::sequence_from_json(j);
    CHECK(back.coeffs == seq.coeffs);
    Json bad = j;
    bad["period"] = 2;
    CHECK_THROWS_AS((void)zetalab::sequence_from_json(bad), std::invalid_argument);
}

TEST_CASE("spec round trip and presets") {
    const auto spec = zetalab::zeta_squared_spec(50);
    const auto back = zetalab::spec_from_json(zetalab::to_json(spec));
    CHECK(back.label == spec.label);
    CHECK(back.local_factors.size() == spec.local_factors.size());
    const auto preset = zetalab::spec_from_json(Json{{"preset", "riemann"}, {"max_prime", 97}});
    CHECK(preset.label == "riemann");
    CHECK(preset.max_prime() == 97);
}

TEST_CASE("collection round trip in all difference modes") {
    for (const auto& preset : zetalab::presets()) {
        const auto j = zetalab::to_json(preset);
        const auto back = zetalab::collection_from_json(j);
        CHECK(back.label == preset.label);
        CHECK(zetalab::to_json(back) == j);  // canonical form is stable
    }
    const auto by_ref = zetalab::collection_from_json(Json{{"preset", "alpha_pi"}});
    CHECK(by_ref.label == "alpha_pi");
}

TEST_CASE("scan config round trip is identical JSON") {
    zetalab::ScanConfig config;
    config.collection = zetalab::preset_by_label("two_alphas");
    config.spec = zetalab::riemann_spec(100);
    config.k1 = zetalab::grid_compact(zetalab::DiskShape{{0.85, 0.0}, 0.02}, 0.01,
                                      {0.5, 1.0, 1.0});
    config.f1 = zetalab::make_target(zetalab::ExpPolynomialTarget{{{0.0, 0.0}, {0.1, 0.0}}}, true);
    for (const auto& family : config.collection.families) {
        std::vector<zetalab::CompactSetGrid> grids;
        std::vector<zetalab::TargetFunction> targets;
        for (std::size_t l = 0; l < family.sequences.size(); ++l) {
            grids.push_back(config.k1);
            targets.push_back(zetalab::make_target(zetalab::SelfShiftTarget{0.0}));
        }
        config.k2.push_back(grids);
        config.f2.push_back(targets);
    }
    config.n_shifts = 64;
    const Json j = zetalab::to_json(config);
    const auto back = zetalab::scan_config_from_json(j);
    CHECK(zetalab::to_json(back) == j);
    CHECK(back.k1.points.size() == config.k1.points.size());
}

TEST_CASE("torus point canonical form") {
    const Json j = zetalab::torus_point_to_json(42, 100, 50, 2);
    CHECK(j.at("seed") == 42);
    CHECK(j.at("groups") == 2);
}
