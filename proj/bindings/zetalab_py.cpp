// Python bindings for the main operations: evaluators, smoothing, torus
// diagnostics, admissibility checks, and the shift scanner.  Config-heavy
// entry points accept JSON strings in the documented file format.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetalab/hurwitz.hpp"
#include "zetalab/io.hpp"
#include "zetalab/mean_value.hpp"
#include "zetalab/moments.hpp"
#include "zetalab/periodic.hpp"
#include "zetalab/rank.hpp"
#include "zetalab/torus.hpp"

namespace py = pybind11;
using zetalab::Complex;
using zetalab::Json;

namespace {

zetalab::PeriodicSequence make_sequence(const std::vector<Complex>& coeffs) {
    zetalab::PeriodicSequence seq{coeffs};
    seq.validate();
    return seq;
}

zetalab::CoefficientMatrix matrix_from_rows(const std::vector<std::vector<Complex>>& rows) {
    zetalab::CoefficientMatrix m;
    m.rows = rows.size();
    m.cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& row : rows) {
        if (row.size() != m.cols) throw std::invalid_argument("ragged matrix");
        for (const Complex& v : row) m.entries.push_back(v);
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_zetalab, m) {
    m.doc() = "zeta-function universality laboratory (C++ core)";

    py::register_exception<zetalab::PoleError>(m, "PoleError");
    py::register_exception<zetalab::ConvergenceError>(m, "ConvergenceError");
    py::register_exception<zetalab::AdmissibilityError>(m, "AdmissibilityError");

    m.def("hurwitz_zeta", &zetalab::hurwitz_zeta, py::arg("s"), py::arg("a"),
          "Hurwitz zeta, Euler-Maclaurin continuation");
    m.def(
        "periodic_hurwitz_zeta",
        [](Complex s, double alpha, const std::vector<Complex>& coeffs) {
            return zetalab::periodic_hurwitz_zeta(s, alpha, make_sequence(coeffs));
        },
        py::arg("s"), py::arg("alpha"), py::arg("coeffs"));
    m.def(
        "residue_b",
        [](const std::vector<Complex>& coeffs) { return zetalab::residue_b(make_sequence(coeffs)); },
        py::arg("coeffs"));

    m.def(
        "dirichlet_coefficients",
        [](const std::string& spec_json, std::size_t K) {
            const auto spec = zetalab::spec_from_json(Json::parse(spec_json));
            return zetalab::dirichlet_coefficients(spec, K).values;
        },
        py::arg("spec_json"), py::arg("K"));
    m.def(
        "matsumoto_eval",
        [](const std::string& spec_json, Complex s, const std::string& mode, std::size_t bound) {
            const auto spec = zetalab::spec_from_json(Json::parse(spec_json));
            if (mode == "euler_product")
                return zetalab::matsumoto_eval(
                    spec, s, zetalab::EulerProductMode{static_cast<std::uint32_t>(bound)});
            if (mode == "dirichlet_sum")
                return zetalab::matsumoto_eval(spec, s, zetalab::DirichletSumMode{bound});
            throw std::invalid_argument("mode must be euler_product or dirichlet_sum");
        },
        py::arg("spec_json"), py::arg("s"), py::arg("mode"), py::arg("bound"));
    m.def(
        "steuding_kappa",
        [](const std::string& spec_json, double x) {
            const auto spec = zetalab::spec_from_json(Json::parse(spec_json));
            const auto coeffs =
                zetalab::dirichlet_coefficients(spec, static_cast<std::size_t>(x) + 1);
            return zetalab::steuding_kappa(coeffs, spec, x);
        },
        py::arg("spec_json"), py::arg("x"));

    m.def(
        "mean_square_zeta_line",
        [](double sigma0, double T, std::size_t steps) {
            return zetalab::mean_square_on_line(
                [](Complex s) { return zetalab::hurwitz_zeta(s, 1.0); }, sigma0, T, steps);
        },
        py::arg("sigma0"), py::arg("T"), py::arg("steps"));

    m.def("weight_v1",
          [](std::uint64_t mm, std::uint64_t n, double sigma0_star) {
              return zetalab::weight_v1(mm, {n, sigma0_star});
          });
    m.def("weight_v2", [](std::uint64_t mm, double alpha, std::uint64_t n, double sigma0_star) {
        return zetalab::weight_v2(mm, alpha, {n, sigma0_star});
    });
    m.def(
        "phi_n",
        [](Complex s, const std::string& spec_json, std::uint64_t n, double sigma0_star) {
            const auto spec = zetalab::spec_from_json(Json::parse(spec_json));
            const zetalab::SmoothingParams params{n, sigma0_star};
            const auto coeffs =
                zetalab::dirichlet_coefficients(spec, zetalab::required_truncation(params));
            return zetalab::phi_n(s, coeffs, params);
        },
        py::arg("s"), py::arg("spec_json"), py::arg("n"), py::arg("sigma0_star") = 0.6);
    m.def(
        "zeta_n",
        [](Complex s, double alpha, const std::vector<Complex>& coeffs, std::uint64_t n,
           double sigma0_star) {
            return zetalab::zeta_n(s, alpha, make_sequence(coeffs), {n, sigma0_star});
        },
        py::arg("s"), py::arg("alpha"), py::arg("coeffs"), py::arg("n"),
        py::arg("sigma0_star") = 0.6);

    m.def(
        "rank_check",
        [](const std::vector<std::vector<Complex>>& rows, double tol) {
            return zetalab::rank_check(matrix_from_rows(rows), tol);
        },
        py::arg("rows"), py::arg("tol") = 0.0);
    m.def("presets", [] {
        std::vector<std::string> labels;
        for (const auto& preset : zetalab::presets()) labels.push_back(preset.label);
        return labels;
    });
    m.def(
        "check_admissibility",
        [](const std::string& collection_json) {
            const auto collection =
                zetalab::collection_from_json(Json::parse(collection_json));
            return zetalab::to_json(zetalab::check_admissibility(collection, {})).dump();
        },
        py::arg("collection_json"));
    m.def(
        "relation_search",
        [](const std::vector<std::pair<std::string, std::pair<long long, long long>>>& entries,
           std::size_t subset_size, int digits, long long max_coeff) {
            zetalab::LogSet set;
            for (const auto& [label, frac] : entries)
                set.entries.push_back(zetalab::make_log_rational_entry(
                    label, 1.0, zetalab::BigInt(frac.first), zetalab::BigInt(frac.second)));
            return zetalab::to_json(
                       zetalab::relation_search(set, subset_size, digits, max_coeff))
                .dump();
        },
        py::arg("entries"), py::arg("subset_size"), py::arg("digits") = 40,
        py::arg("max_coeff") = 10000,
        "entries: [(label, (num, den))] for log(num/den) values");

    m.def(
        "weyl_sum",
        [](const std::string& collection_json,
           const std::map<std::uint32_t, int>& prime_exponents,
           const std::map<std::pair<std::size_t, std::uint32_t>, int>& factor_exponents,
           std::uint64_t N) {
            const auto collection =
                zetalab::collection_from_json(Json::parse(collection_json));
            zetalab::CharacterIndex chi{prime_exponents, factor_exponents};
            return zetalab::weyl_sum(chi, N, collection);
        },
        py::arg("collection_json"), py::arg("prime_exponents"), py::arg("factor_exponents"),
        py::arg("N"));
    m.def("star_discrepancy_1d", &zetalab::star_discrepancy_1d, py::arg("angles"),
          py::arg("exact") = true);
    m.def(
        "compare_distributions",
        [](const std::string& collection_json, const std::string& spec_json, double sigma,
           std::size_t shift_count, std::size_t mc_count, std::uint64_t n_smooth,
           std::uint64_t seed) {
            const auto collection =
                zetalab::collection_from_json(Json::parse(collection_json));
            const auto spec = zetalab::spec_from_json(Json::parse(spec_json));
            zetalab::CompareOptions options;
            options.sigma = sigma;
            options.shift_count = shift_count;
            options.mc_count = mc_count;
            options.n_smooth = n_smooth;
            options.seed = seed;
            return zetalab::to_json(zetalab::compare_distributions(collection, spec, options))
                .dump();
        },
        py::arg("collection_json"), py::arg("spec_json"), py::arg("sigma") = 1.5,
        py::arg("shift_count") = 1000, py::arg("mc_count") = 1000, py::arg("n_smooth") = 20,
        py::arg("seed") = 1);

    m.def(
        "scan_density",
        [](const std::string& config_json) {
            const auto config = zetalab::scan_config_from_json(Json::parse(config_json));
            return zetalab::scan_summary_to_json(zetalab::scan_density(config)).dump();
        },
        py::arg("config_json"), "run a scan from a JSON config; returns the summary JSON");
    m.def("default_scan_config", [] {
        zetalab::ScanConfig config;
        config.collection = zetalab::preset_by_label("alpha_pi");
        config.spec = zetalab::riemann_spec(1000);
        config.k1 = zetalab::grid_compact(zetalab::DiskShape{{0.85, 0.0}, 0.02}, 0.01,
                                          {0.5, 1.0, 1.0});
        config.f1 =
            zetalab::make_target(zetalab::ExpPolynomialTarget{{{0.0, 0.0}, {0.1, 0.0}}}, true);
        for (const auto& family : config.collection.families) {
            std::vector<zetalab::CompactSetGrid> grids;
            std::vector<zetalab::TargetFunction> targets;
            for (std::size_t l = 0; l < family.sequences.size(); ++l) {
                grids.push_back(config.k1);
                targets.push_back(zetalab::make_target(zetalab::SelfShiftTarget{0.0}));
            }
            config.k2.push_back(std::move(grids));
            config.f2.push_back(std::move(targets));
        }
        config.n_shifts = 500;
        config.override_admissibility = true;
        return zetalab::to_json(config).dump();
    });
}
