#include "zetalab/io.hpp"

#include <fstream>
#include <stdexcept>

namespace zetalab {

Json complex_to_json(const Complex& z) {
    if (z.imag() == 0.0) return Json(z.real());
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2)
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw std::invalid_argument("expected a number or [re, im] pair");
}

Json to_json(const PeriodicSequence& seq) {
    Json coeffs = Json::array();
    for (const Complex& b : seq.coeffs) coeffs.push_back(complex_to_json(b));
    return Json{{"coeffs", coeffs}, {"period", seq.coeffs.size()}};
}

PeriodicSequence sequence_from_json(const Json& j) {
    PeriodicSequence seq;
    for (const Json& c : j.at("coeffs")) seq.coeffs.push_back(complex_from_json(c));
    if (j.contains("period") && j.at("period").get<std::size_t>() != seq.coeffs.size())
        throw std::invalid_argument("periodic sequence: period does not match coeffs length");
    seq.validate();
    return seq;
}

Json to_json(const EulerProductSpec& spec) {
    Json factors = Json::array();
    for (const LocalFactor& lf : spec.local_factors) {
        Json terms = Json::array();
        for (const LocalFactorTerm& t : lf.terms)
            terms.push_back(Json{{"a", complex_to_json(t.a)}, {"f", t.f}});
        factors.push_back(Json{{"prime", lf.prime}, {"terms", terms}});
    }
    return Json{{"label", spec.label},
                {"growth_alpha", spec.growth_alpha},
                {"growth_beta", spec.growth_beta},
                {"c1", spec.c1},
                {"local_factors", factors}};
}

EulerProductSpec spec_from_json(const Json& j) {
    if (j.contains("preset")) {
        const std::string name = j.at("preset").get<std::string>();
        const std::uint32_t max_prime = j.value("max_prime", 100000u);
        if (name == "riemann") return riemann_spec(max_prime);
        if (name == "zeta_squared") return zeta_squared_spec(max_prime);
        if (name == "one") return unit_spec(max_prime);
        throw std::invalid_argument("unknown spec preset: " + name);
    }
    EulerProductSpec spec;
    spec.label = j.value("label", "custom");
    spec.growth_alpha = j.value("growth_alpha", 0.0);
    spec.growth_beta = j.value("growth_beta", 0.0);
    spec.c1 = j.value("c1", 1.0);
    for (const Json& f : j.at("local_factors")) {
        LocalFactor lf;
        lf.prime = f.at("prime").get<std::uint32_t>();
        for (const Json& t : f.at("terms"))
            lf.terms.push_back({complex_from_json(t.at("a")), t.at("f").get<std::uint32_t>()});
        spec.local_factors.push_back(std::move(lf));
    }
    spec.validate();
    return spec;
}

Json to_json(const Differences& d) {
    switch (d.mode) {
        case DifferenceMode::equal:
            return Json{{"mode", "equal"}, {"h", d.h}};
        case DifferenceMode::per_family:
            return Json{{"mode", "per_family"}, {"h1", d.h1}, {"h2", d.h2}};
        case DifferenceMode::per_sequence:
            return Json{{"mode", "per_sequence"}, {"h1", d.h1}, {"h2jl", d.h2jl}};
    }
    throw std::logic_error("unreachable");
}

Differences differences_from_json(const Json& j) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "equal") return Differences::equal(j.at("h").get<double>());
    if (mode == "per_family")
        return Differences::per_family(j.at("h1").get<double>(),
                                       j.at("h2").get<std::vector<double>>());
    if (mode == "per_sequence")
        return Differences::per_sequence(j.at("h1").get<double>(),
                                         j.at("h2jl").get<std::vector<std::vector<double>>>());
    throw std::invalid_argument("unknown difference mode: " + mode);
}

Json to_json(const HurwitzCollection& collection) {
    Json families = Json::array();
    for (const HurwitzFamily& f : collection.families) {
        Json sequences = Json::array();
        for (const PeriodicSequence& seq : f.sequences) sequences.push_back(to_json(seq));
        families.push_back(Json{{"alpha", f.alpha}, {"sequences", sequences}});
    }
    return Json{{"label", collection.label},
                {"families", families},
                {"differences", to_json(collection.differences)}};
}

HurwitzCollection collection_from_json(const Json& j) {
    if (j.contains("preset")) return preset_by_label(j.at("preset").get<std::string>());
    HurwitzCollection collection;
    collection.label = j.value("label", "custom");
    for (const Json& f : j.at("families")) {
        HurwitzFamily family;
        family.alpha = f.at("alpha").get<double>();
        for (const Json& s : f.at("sequences")) family.sequences.push_back(sequence_from_json(s));
        collection.families.push_back(std::move(family));
    }
    collection.differences = differences_from_json(j.at("differences"));
    collection.validate();
    return collection;
}

Json torus_point_to_json(std::uint64_t seed, std::uint32_t p_max, std::uint32_t m_max,
                         std::size_t groups) {
    return Json{{"seed", seed}, {"p_max", p_max}, {"m_max", m_max}, {"groups", groups}};
}

Json to_json(const StripRegion& region) {
    return Json{{"sigma_lo", region.sigma_lo},
                {"sigma_hi", region.sigma_hi},
                {"t_bound", region.t_bound}};
}

StripRegion strip_from_json(const Json& j) {
    return {j.at("sigma_lo").get<double>(), j.at("sigma_hi").get<double>(),
            j.at("t_bound").get<double>()};
}

Json to_json(const GridShape& shape) {
    if (std::holds_alternative<RectangleShape>(shape)) {
        const auto& r = std::get<RectangleShape>(shape);
        return Json{{"kind", "rectangle"},
                    {"sigma_lo", r.sigma_lo},
                    {"sigma_hi", r.sigma_hi},
                    {"t_lo", r.t_lo},
                    {"t_hi", r.t_hi}};
    }
    const auto& d = std::get<DiskShape>(shape);
    return Json{{"kind", "disk"}, {"center", complex_to_json(d.center)}, {"radius", d.radius}};
}

GridShape shape_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rectangle")
        return RectangleShape{j.at("sigma_lo").get<double>(), j.at("sigma_hi").get<double>(),
                              j.at("t_lo").get<double>(), j.at("t_hi").get<double>()};
    if (kind == "disk")
        return DiskShape{complex_from_json(j.at("center")), j.at("radius").get<double>()};
    throw std::invalid_argument("unknown grid shape: " + kind);
}

Json grid_config_to_json(const CompactSetGrid& grid) {
    return Json{{"shape", to_json(grid.shape)},
                {"resolution", grid.resolution},
                {"ambient", to_json(grid.ambient)}};
}

CompactSetGrid grid_from_json(const Json& j) {
    return grid_compact(shape_from_json(j.at("shape")), j.at("resolution").get<double>(),
                        strip_from_json(j.at("ambient")));
}

Json to_json(const TargetFunction& target) {
    Json j;
    if (std::holds_alternative<DirichletPolynomialTarget>(target.kind)) {
        j["kind"] = "dirichlet_polynomial";
        Json coeffs = Json::array();
        for (const Complex& c : std::get<DirichletPolynomialTarget>(target.kind).coeffs)
            coeffs.push_back(complex_to_json(c));
        j["coeffs"] = coeffs;
    } else if (std::holds_alternative<PolynomialTarget>(target.kind)) {
        j["kind"] = "polynomial";
        Json coeffs = Json::array();
        for (const Complex& c : std::get<PolynomialTarget>(target.kind).coeffs)
            coeffs.push_back(complex_to_json(c));
        j["coeffs"] = coeffs;
    } else if (std::holds_alternative<ExpPolynomialTarget>(target.kind)) {
        j["kind"] = "exp_polynomial";
        Json inner = Json::array();
        for (const Complex& c : std::get<ExpPolynomialTarget>(target.kind).inner)
            inner.push_back(complex_to_json(c));
        j["inner"] = inner;
    } else {
        j["kind"] = "self_shift";
        j["delta"] = std::get<SelfShiftTarget>(target.kind).delta;
    }
    j["nonvanishing_required"] = target.nonvanishing_required;
    return j;
}

TargetFunction target_from_json(const Json& j, const CompactSetGrid* grid) {
    const std::string kind = j.at("kind").get<std::string>();
    const bool nonvanishing = j.value("nonvanishing_required", false);
    TargetKind payload;
    if (kind == "dirichlet_polynomial") {
        DirichletPolynomialTarget t;
        for (const Json& c : j.at("coeffs")) t.coeffs.push_back(complex_from_json(c));
        payload = std::move(t);
    } else if (kind == "polynomial") {
        PolynomialTarget t;
        for (const Json& c : j.at("coeffs")) t.coeffs.push_back(complex_from_json(c));
        payload = std::move(t);
    } else if (kind == "exp_polynomial") {
        ExpPolynomialTarget t;
        for (const Json& c : j.at("inner")) t.inner.push_back(complex_from_json(c));
        payload = std::move(t);
    } else if (kind == "self_shift") {
        payload = SelfShiftTarget{j.value("delta", 0.0)};
    } else {
        throw std::invalid_argument("unknown target kind: " + kind);
    }
    return make_target(std::move(payload), nonvanishing, grid);
}

Json to_json(const AdmissibilityOptions& options) {
    return Json{{"p_cut", options.p_cut},
                {"m_cut", options.m_cut},
                {"subset_size", options.subset_size},
                {"precision_digits", options.precision_digits},
                {"max_coeff", options.max_coeff},
                {"subset_cap", options.subset_cap}};
}

AdmissibilityOptions admissibility_options_from_json(const Json& j) {
    AdmissibilityOptions options;
    options.p_cut = j.value("p_cut", options.p_cut);
    options.m_cut = j.value("m_cut", options.m_cut);
    options.subset_size = j.value("subset_size", options.subset_size);
    options.precision_digits = j.value("precision_digits", options.precision_digits);
    options.max_coeff = j.value("max_coeff", options.max_coeff);
    options.subset_cap = j.value("subset_cap", options.subset_cap);
    return options;
}

Json to_json(const ScanConfig& config) {
    Json k2 = Json::array();
    Json f2 = Json::array();
    for (std::size_t j = 0; j < config.k2.size(); ++j) {
        Json grids = Json::array(), targets = Json::array();
        for (std::size_t l = 0; l < config.k2[j].size(); ++l) {
            grids.push_back(grid_config_to_json(config.k2[j][l]));
            targets.push_back(to_json(config.f2[j][l]));
        }
        k2.push_back(grids);
        f2.push_back(targets);
    }
    const char* mode = config.phi_mode == PhiEvalMode::continued       ? "continued"
                       : config.phi_mode == PhiEvalMode::smoothed      ? "smoothed"
                                                                       : "dirichlet_sum";
    return Json{{"collection", to_json(config.collection)},
                {"spec", to_json(config.spec)},
                {"phi_mode", mode},
                {"k1", grid_config_to_json(config.k1)},
                {"k2", k2},
                {"f1", to_json(config.f1)},
                {"f2", f2},
                {"epsilons", config.epsilons},
                {"n_shifts", config.n_shifts},
                {"workers", config.workers},
                {"override_admissibility", config.override_admissibility},
                {"admissibility", to_json(config.admissibility)},
                {"smoothing_n", config.smoothing_n},
                {"sigma0_star", config.sigma0_star},
                {"dirichlet_truncation", config.dirichlet_truncation},
                {"seed", config.seed}};
}

ScanConfig scan_config_from_json(const Json& j) {
    ScanConfig config;
    config.collection = collection_from_json(j.at("collection"));
    config.spec = spec_from_json(j.at("spec"));
    const std::string mode = j.value("phi_mode", "continued");
    if (mode == "continued")
        config.phi_mode = PhiEvalMode::continued;
    else if (mode == "smoothed")
        config.phi_mode = PhiEvalMode::smoothed;
    else if (mode == "dirichlet_sum")
        config.phi_mode = PhiEvalMode::dirichlet_sum;
    else
        throw std::invalid_argument("unknown phi_mode: " + mode);
    config.k1 = grid_from_json(j.at("k1"));
    for (const Json& grids : j.at("k2")) {
        std::vector<CompactSetGrid> row;
        for (const Json& g : grids) row.push_back(grid_from_json(g));
        config.k2.push_back(std::move(row));
    }
    config.f1 = target_from_json(j.at("f1"), &config.k1);
    std::size_t jdx = 0;
    for (const Json& targets : j.at("f2")) {
        std::vector<TargetFunction> row;
        std::size_t ldx = 0;
        for (const Json& t : targets) {
            row.push_back(target_from_json(t, &config.k2.at(jdx).at(ldx)));
            ++ldx;
        }
        config.f2.push_back(std::move(row));
        ++jdx;
    }
    config.epsilons = j.value("epsilons", config.epsilons);
    config.n_shifts = j.value("n_shifts", config.n_shifts);
    config.workers = j.value("workers", config.workers);
    config.override_admissibility = j.value("override_admissibility", false);
    if (j.contains("admissibility"))
        config.admissibility = admissibility_options_from_json(j.at("admissibility"));
    config.smoothing_n = j.value("smoothing_n", config.smoothing_n);
    config.sigma0_star = j.value("sigma0_star", config.sigma0_star);
    config.dirichlet_truncation = j.value("dirichlet_truncation", config.dirichlet_truncation);
    config.seed = j.value("seed", config.seed);
    return config;
}

Json to_json(const RelationReport& report) {
    Json j{{"found", report.found},
           {"precision_digits", report.precision_digits},
           {"max_coeff_bound", report.max_coeff_bound},
           {"residual", report.residual},
           {"subsets_examined", report.subsets_examined}};
    if (report.found) {
        j["coefficients"] = report.coefficients;
        j["subset_labels"] = report.subset_labels;
    }
    return j;
}

Json to_json(const AdmissibilityReport& report) {
    Json ranks = Json::array();
    for (const FamilyRankResult& r : report.ranks)
        ranks.push_back(Json{{"rank", r.rank}, {"required", r.required}, {"pass", r.pass}});
    return Json{{"ranks", ranks},
                {"relation", to_json(report.relation)},
                {"admissible", report.admissible}};
}

Json to_json(const MomentReport& report) {
    Json components = Json::array();
    for (const MomentComponent& c : report.components) {
        components.push_back(Json{{"label", c.label},
                                  {"mean_shift", complex_to_json(c.mean_shift)},
                                  {"mean_mc", complex_to_json(c.mean_mc)},
                                  {"second_moment_shift", c.second_moment_shift},
                                  {"second_moment_mc", c.second_moment_mc},
                                  {"abs_mean_shift", c.abs_mean_shift},
                                  {"abs_mean_mc", c.abs_mean_mc},
                                  {"se_mean", c.se_mean},
                                  {"se_second", c.se_second},
                                  {"mean_ok", c.mean_ok},
                                  {"second_ok", c.second_ok}});
    }
    return Json{{"sample_count_shift", report.sample_count_shift},
                {"sample_count_mc", report.sample_count_mc},
                {"sigma", report.sigma},
                {"n_smooth", report.n_smooth},
                {"seed", report.seed},
                {"tolerance_factor", report.tolerance_factor},
                {"components", components},
                {"all_ok", report.all_ok}};
}

Json scan_summary_to_json(const ScanResult& result) {
    Json eps = Json::array();
    for (const EpsilonSummary& e : result.epsilons)
        eps.push_back(Json{{"epsilon", e.epsilon},
                           {"hit_count", e.hit_count},
                           {"density", e.density},
                           {"first_hits", e.first_hits}});
    double max_sup = 0.0, min_sup = 1e300;
    for (double v : result.per_k_max_sup) {
        max_sup = std::max(max_sup, v);
        min_sup = std::min(min_sup, v);
    }
    return Json{{"n_shifts", result.n_shifts},
                {"collection", result.collection_label},
                {"spec", result.spec_label},
                {"mode", result.mode},
                {"seed", result.seed},
                {"workers_used", result.workers_used},
                {"components", result.component_labels},
                {"min_sup", min_sup},
                {"max_sup", max_sup},
                {"epsilons", eps}};
}

Json to_json(const Histogram& hist) {
    return Json{{"edges", hist.edges}, {"counts", hist.counts}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace zetalab
