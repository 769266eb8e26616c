// zetalab - batch front-end for the zeta-function universality laboratory.
// One experiment per invocation; configuration and summaries are JSON,
// plot-ready dumps are tab-separated text.
//
// Exit codes: 0 ok, 2 config error, 3 admissibility failure, 4 evaluator /
// numeric error, 1 anything else.

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "zetalab/hurwitz.hpp"
#include "zetalab/io.hpp"
#include "zetalab/mean_value.hpp"
#include "zetalab/moments.hpp"
#include "zetalab/periodic.hpp"
#include "zetalab/torus.hpp"

namespace {

using zetalab::Json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitAdmissibility = 3;
constexpr int kExitEvaluator = 4;

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::string dump_path;
    std::string density_dump_path;
    std::string histogram_dump_path;
    std::size_t histogram_bins = 10;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::size_t workers = 0;
    bool dump_default = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON configuration file");
    cmd->add_option("--out", args.out_path, "write the summary record to this file");
    cmd->add_option("--dump", args.dump_path, "write the plot-data dump to this file");
    cmd->add_option("--seed", args.seed, "seed recorded in the output")
        ->each([&args](const std::string&) { args.seed_set = true; });
    cmd->add_option("--workers", args.workers,
                    "worker threads (default: ZETALAB_WORKERS or hardware)");
    cmd->add_flag("--dump-default-config", args.dump_default,
                  "print the default config for this subcommand and exit");
}

std::size_t default_workers(const CommonArgs& args) {
    if (args.workers != 0) return args.workers;
    if (const char* env = std::getenv("ZETALAB_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 0;  // let the operation pick hardware concurrency
}

Json load_config(const CommonArgs& args, const Json& defaults) {
    if (args.config_path.empty()) return defaults;
    Json config = defaults;
    const Json user = zetalab::load_json_file(args.config_path);
    for (const auto& [key, value] : user.items()) config[key] = value;
    return config;
}

void emit(const CommonArgs& args, const Json& summary) {
    std::cout << summary.dump(2) << "\n";
    if (!args.out_path.empty()) zetalab::save_json_file(args.out_path, summary);
}

void write_dump(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

std::string format_sig(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// ---------------------------------------------------------------- eval ----
Json eval_defaults() {
    return Json{{"function", "hurwitz"},
                {"s", Json::array({2.0, 0.0})},
                {"alpha", 1.0},
                {"sequence", Json{{"coeffs", Json::array({1.0})}, {"period", 1}}},
                {"spec", Json{{"preset", "riemann"}, {"max_prime", 100000}}},
                {"mode", "euler_product"},
                {"max_prime", 100000},
                {"truncation", 10000}};
}

int run_eval(const CommonArgs& args) {
    const Json config = load_config(args, eval_defaults());
    const zetalab::Complex s = zetalab::complex_from_json(config.at("s"));
    const std::string function = config.at("function").get<std::string>();
    zetalab::Complex value;
    if (function == "hurwitz") {
        value = zetalab::hurwitz_zeta(s, config.at("alpha").get<double>());
    } else if (function == "periodic_hurwitz") {
        value = zetalab::periodic_hurwitz_zeta(
            s, config.at("alpha").get<double>(),
            zetalab::sequence_from_json(config.at("sequence")));
    } else if (function == "matsumoto") {
        const auto spec = zetalab::spec_from_json(config.at("spec"));
        const std::string mode = config.at("mode").get<std::string>();
        if (mode == "euler_product")
            value = zetalab::matsumoto_eval(
                spec, s, zetalab::EulerProductMode{config.at("max_prime").get<std::uint32_t>()});
        else if (mode == "dirichlet_sum")
            value = zetalab::matsumoto_eval(
                spec, s, zetalab::DirichletSumMode{config.at("truncation").get<std::size_t>()});
        else
            throw std::invalid_argument("eval: unknown mode " + mode);
    } else {
        throw std::invalid_argument("eval: unknown function " + function);
    }
    std::cout << "value = " << format_sig(value.real()) << " + " << format_sig(value.imag())
              << "i\n";
    emit(args, Json{{"command", "eval"},
                    {"seed", args.seed},
                    {"config", config},
                    {"value", Json::array({value.real(), value.imag()})}});
    return kExitOk;
}

// -------------------------------------------------------------- smooth ----
Json smooth_defaults() {
    return Json{{"kind", "ladder"},
                {"spec", Json{{"preset", "riemann"}, {"max_prime", 100000}}},
                {"s", Json::array({0.9, 5.0})},
                {"alpha", 1.0 / 3.0},
                {"sequence", Json{{"coeffs", Json::array({1.0})}, {"period", 1}}},
                {"n", 1000},
                {"n_list", Json::array({100, 1000, 10000, 100000})},
                {"sigma0_star", 0.6}};
}

int run_smooth(const CommonArgs& args) {
    const Json config = load_config(args, smooth_defaults());
    const auto spec = zetalab::spec_from_json(config.at("spec"));
    const zetalab::Complex s = zetalab::complex_from_json(config.at("s"));
    const double sigma0_star = config.at("sigma0_star").get<double>();
    const double alpha = config.at("alpha").get<double>();
    const auto seq = zetalab::sequence_from_json(config.at("sequence"));
    const std::string kind = config.at("kind").get<std::string>();

    Json summary{{"command", "smooth"}, {"seed", args.seed}, {"config", config}};
    std::ostringstream dump;
    if (kind == "phi_n" || kind == "zeta_n") {
        const zetalab::SmoothingParams params{config.at("n").get<std::uint64_t>(), sigma0_star};
        const std::size_t K = zetalab::required_truncation(params);
        zetalab::Complex value;
        if (kind == "phi_n") {
            const auto coeffs = zetalab::dirichlet_coefficients(spec, K);
            value = zetalab::phi_n(s, coeffs, params);
        } else {
            value = zetalab::zeta_n(s, alpha, seq, params);
        }
        std::cout << "value = " << format_sig(value.real()) << " + " << format_sig(value.imag())
                  << "i\n";
        summary["value"] = Json::array({value.real(), value.imag()});
    } else if (kind == "ladder") {
        // |phi_n - phi| and |zeta_n - zeta| against the continued evaluators.
        const zetalab::Complex phi_ref = zetalab::hurwitz_zeta(s, 1.0);
        const zetalab::Complex zeta_ref = zetalab::periodic_hurwitz_zeta(s, alpha, seq);
        Json rows = Json::array();
        dump << "n\tabs_error_phi\tabs_error_zeta\n";
        for (const Json& jn : config.at("n_list")) {
            const zetalab::SmoothingParams params{jn.get<std::uint64_t>(), sigma0_star};
            const std::size_t K = zetalab::required_truncation(params);
            const auto coeffs = zetalab::dirichlet_coefficients(spec, K);
            const double err_phi = std::abs(zetalab::phi_n(s, coeffs, params) - phi_ref);
            const double err_zeta = std::abs(zetalab::zeta_n(s, alpha, seq, params) - zeta_ref);
            rows.push_back(Json{{"n", jn}, {"abs_error_phi", err_phi},
                                {"abs_error_zeta", err_zeta}});
            dump << jn.get<std::uint64_t>() << "\t" << format_sig(err_phi) << "\t"
                 << format_sig(err_zeta) << "\n";
            std::cout << "n=" << jn.get<std::uint64_t>() << "  |phi_n-phi|=" << format_sig(err_phi)
                      << "  |zeta_n-zeta|=" << format_sig(err_zeta) << "\n";
        }
        summary["ladder"] = rows;
    } else {
        throw std::invalid_argument("smooth: unknown kind " + kind);
    }
    if (!args.dump_path.empty() && dump.tellp() > 0) write_dump(args.dump_path, dump.str());
    emit(args, summary);
    return kExitOk;
}

// ------------------------------------------------------- admissibility ----
Json admissibility_defaults() {
    return Json{{"collection", Json{{"preset", "alpha_pi"}}},
                {"p_cut", 20},
                {"m_cut", 20},
                {"subset_size", 4},
                {"precision_digits", 50},
                {"max_coeff", 10000},
                {"subset_cap", 512}};
}

int run_admissibility(const CommonArgs& args) {
    const Json config = load_config(args, admissibility_defaults());
    const auto collection = zetalab::collection_from_json(config.at("collection"));
    zetalab::AdmissibilityOptions options = zetalab::admissibility_options_from_json(config);
    const auto report = zetalab::check_admissibility(collection, options);
    for (std::size_t j = 0; j < report.ranks.size(); ++j)
        std::cout << "family " << j + 1 << ": rank " << report.ranks[j].rank << " / required "
                  << report.ranks[j].required << (report.ranks[j].pass ? "  pass" : "  FAIL")
                  << "\n";
    std::cout << "relation: " << (report.relation.found ? "FOUND" : "none") << " over "
              << report.relation.subsets_examined << " subsets\n";
    emit(args, Json{{"command", "admissibility"},
                    {"seed", args.seed},
                    {"config", config},
                    {"report", zetalab::to_json(report)}});
    return report.admissible ? kExitOk : kExitAdmissibility;
}

// --------------------------------------------------------------- torus ----
Json torus_defaults() {
    return Json{{"collection", Json{{"preset", "alpha_pi"}}},
                {"kind", "discrepancy"},
                {"N", 100000},
                {"N_list", Json::array({1000, 10000, 100000})},
                {"primes", Json::array({2, 3, 5})},
                {"characters", 10},
                {"p_max", 20},
                {"m_max", 20},
                {"mc_samples", 10000},
                {"shift_count", 10000},
                {"sigma", 1.5},
                {"n_smooth", 50},
                {"spec", Json{{"preset", "riemann"}, {"max_prime", 20000}}}};
}

int run_torus(const CommonArgs& args) {
    const Json config = load_config(args, torus_defaults());
    const auto collection = zetalab::collection_from_json(config.at("collection"));
    const std::string kind = config.at("kind").get<std::string>();
    Json summary{{"command", "torus"}, {"seed", args.seed}, {"config", config}};
    std::ostringstream dump;

    if (kind == "discrepancy") {
        // Star discrepancy of {k*h1*log p / 2pi mod 1} per prime and N.
        const double h1 = collection.phi_difference();
        Json rows = Json::array();
        dump << "N";
        for (const Json& p : config.at("primes")) dump << "\tdstar_p" << p.get<int>();
        dump << "\n";
        for (const Json& jN : config.at("N_list")) {
            const std::uint64_t N = jN.get<std::uint64_t>();
            Json row{{"N", N}};
            dump << N;
            for (const Json& jp : config.at("primes")) {
                const double logp = std::log(jp.get<double>());
                std::vector<double> angles(N);
                for (std::uint64_t k = 0; k < N; ++k) {
                    const double a = std::fmod(static_cast<double>(k) * h1 * logp /
                                                   zetalab::kTwoPi,
                                               1.0);
                    angles[k] = a < 0.0 ? a + 1.0 : a;
                }
                const double dstar = zetalab::star_discrepancy_1d(std::move(angles), true);
                row["dstar_p" + std::to_string(jp.get<int>())] = dstar;
                dump << "\t" << format_sig(dstar);
            }
            dump << "\n";
            rows.push_back(row);
        }
        summary["discrepancy"] = rows;
    } else if (kind == "weyl") {
        // Random nontrivial characters against the geometric closed form.
        std::mt19937_64 rng(args.seed);
        const auto factors = zetalab::torus_factors(collection);
        const std::uint64_t N = config.at("N").get<std::uint64_t>();
        Json rows = Json::array();
        for (int c = 0; c < config.at("characters").get<int>(); ++c) {
            zetalab::CharacterIndex chi;
            const std::uint32_t primes[] = {2, 3, 5, 7, 11};
            chi.prime_exponents[primes[rng() % 5]] = static_cast<int>(rng() % 5) - 2;
            chi.factor_exponents[{rng() % factors.size(),
                                  static_cast<std::uint32_t>(rng() % 10)}] =
                static_cast<int>(rng() % 5) - 2;
            if (chi.trivial()) chi.prime_exponents[2] = 1;
            const double theta = zetalab::character_angle(chi, collection);
            const auto direct = zetalab::weyl_sum(chi, N, collection);
            const auto closed = zetalab::weyl_sum_closed_form(theta, N);
            rows.push_back(Json{{"theta", theta},
                                {"direct", Json::array({direct.real(), direct.imag()})},
                                {"closed_form_error", std::abs(direct - closed)}});
        }
        summary["weyl"] = rows;
    } else if (kind == "moments") {
        const auto spec = zetalab::spec_from_json(config.at("spec"));
        zetalab::CompareOptions options;
        options.sigma = config.at("sigma").get<double>();
        options.shift_count = config.at("shift_count").get<std::size_t>();
        options.mc_count = config.at("mc_samples").get<std::size_t>();
        options.n_smooth = config.at("n_smooth").get<std::uint64_t>();
        options.seed = args.seed;
        options.keep_samples = !args.dump_path.empty();
        const auto report = zetalab::compare_distributions(collection, spec, options);
        summary["moments"] = zetalab::to_json(report);
        std::cout << (report.all_ok ? "moment gates: pass" : "moment gates: FAIL") << "\n";
        if (options.keep_samples) {
            dump << "index\tkind";
            for (const auto& c : report.components) dump << "\t" << c.label << "_re\t"
                                                         << c.label << "_im";
            dump << "\n";
            for (std::size_t k = 0; k < report.sample_count_shift; ++k) {
                dump << k << "\tshift";
                for (const auto& samples : report.shift_samples)
                    dump << "\t" << format_sig(samples[k].real()) << "\t"
                         << format_sig(samples[k].imag());
                dump << "\n";
            }
            for (std::size_t i = 0; i < report.sample_count_mc; ++i) {
                dump << i << "\tmc";
                for (const auto& samples : report.mc_samples)
                    dump << "\t" << format_sig(samples[i].real()) << "\t"
                         << format_sig(samples[i].imag());
                dump << "\n";
            }
        }
    } else if (kind == "sample") {
        // Haar sample in the canonical compact form; --dump adds the
        // explicit coordinate table.
        const auto factors = zetalab::torus_factors(collection);
        const std::uint32_t p_max = config.at("p_max").get<std::uint32_t>();
        const std::uint32_t m_max = config.at("m_max").get<std::uint32_t>();
        const auto omega = zetalab::sample_omega(args.seed, p_max, m_max, factors.size());
        summary["torus_point"] =
            zetalab::torus_point_to_json(args.seed, p_max, m_max, factors.size());
        dump << "coordinate\tre\tim\n";
        for (std::size_t i = 0; i < omega.primes.size(); ++i)
            dump << "p" << omega.primes[i] << "\t" << format_sig(omega.omega1[i].real()) << "\t"
                 << format_sig(omega.omega1[i].imag()) << "\n";
        for (std::size_t g = 0; g < omega.omega2.size(); ++g)
            for (std::size_t m = 0; m < omega.omega2[g].size(); ++m)
                dump << "g" << g + 1 << "_m" << m << "\t"
                     << format_sig(omega.omega2[g][m].real()) << "\t"
                     << format_sig(omega.omega2[g][m].imag()) << "\n";
    } else if (kind == "rotate_check") {
        const std::uint64_t N = config.at("N").get<std::uint64_t>();
        auto point = zetalab::trajectory_point(0, collection,
                                               config.at("p_max").get<std::uint32_t>(),
                                               config.at("m_max").get<std::uint32_t>());
        for (std::uint64_t k = 0; k < N; ++k) point = zetalab::rotate(point, collection);
        const auto direct = zetalab::trajectory_point(
            N, collection, config.at("p_max").get<std::uint32_t>(),
            config.at("m_max").get<std::uint32_t>());
        double max_err = 0.0;
        for (std::size_t i = 0; i < point.omega1.size(); ++i)
            max_err = std::max(max_err, std::abs(point.omega1[i] - direct.omega1[i]));
        for (std::size_t g = 0; g < point.omega2.size(); ++g)
            for (std::size_t m = 0; m < point.omega2[g].size(); ++m)
                max_err = std::max(max_err, std::abs(point.omega2[g][m] - direct.omega2[g][m]));
        summary["rotate_check"] = Json{{"N", N}, {"max_coordinate_error", max_err}};
        std::cout << "max coordinate error after " << N << " rotations: " << format_sig(max_err)
                  << "\n";
    } else {
        throw std::invalid_argument("torus: unknown kind " + kind);
    }
    if (!args.dump_path.empty() && dump.tellp() > 0) write_dump(args.dump_path, dump.str());
    emit(args, summary);
    return kExitOk;
}

// ----------------------------------------------------------- meanvalue ----
Json meanvalue_defaults() {
    return Json{{"evaluator", "zeta"},
                {"alpha", 1.0},
                {"sigma0", 0.75},
                {"T_list", Json::array({1000, 3000, 5000})},
                {"steps_per_unit", 10}};
}

int run_meanvalue(const CommonArgs& args) {
    const Json config = load_config(args, meanvalue_defaults());
    const double sigma0 = config.at("sigma0").get<double>();
    const double alpha = config.at("alpha").get<double>();
    const std::string evaluator_name = config.at("evaluator").get<std::string>();
    std::function<zetalab::Complex(zetalab::Complex)> evaluator;
    if (evaluator_name == "zeta" || evaluator_name == "hurwitz")
        evaluator = [alpha](zetalab::Complex s) { return zetalab::hurwitz_zeta(s, alpha); };
    else
        throw std::invalid_argument("meanvalue: unknown evaluator " + evaluator_name);

    Json rows = Json::array();
    std::ostringstream dump;
    dump << "T\tmean_square\tresolution_warning\n";
    for (const Json& jT : config.at("T_list")) {
        const double T = jT.get<double>();
        const std::size_t steps = std::max<std::size_t>(
            100, static_cast<std::size_t>(T * config.at("steps_per_unit").get<double>()));
        zetalab::MeanSquareDiagnostics diag;
        const double value = zetalab::mean_square_on_line(evaluator, sigma0, T, steps, &diag);
        rows.push_back(Json{{"T", T},
                            {"mean_square", value},
                            {"max_panel_oscillation", diag.max_panel_oscillation},
                            {"resolution_warning", diag.resolution_warning}});
        dump << T << "\t" << format_sig(value) << "\t" << (diag.resolution_warning ? 1 : 0)
             << "\n";
        std::cout << "T=" << T << "  (1/T) int |f|^2 = " << format_sig(value) << "\n";
    }
    if (!args.dump_path.empty()) write_dump(args.dump_path, dump.str());
    emit(args, Json{{"command", "meanvalue"},
                    {"seed", args.seed},
                    {"config", config},
                    {"table", rows}});
    return kExitOk;
}

// ---------------------------------------------------------------- scan ----
Json scan_defaults() {
    zetalab::ScanConfig config;
    config.collection = zetalab::preset_by_label("alpha_pi");
    config.spec = zetalab::riemann_spec(1000);
    config.k1 = zetalab::grid_compact(zetalab::DiskShape{{0.85, 0.0}, 0.03}, 0.01,
                                      {0.5, 1.0, 1.0});
    config.f1 = zetalab::make_target(zetalab::ExpPolynomialTarget{{{0.0, 0.0}, {0.1, 0.0}}}, true);
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
    config.n_shifts = 1000;
    return zetalab::to_json(config);
}

int run_scan(const CommonArgs& args) {
    const Json config_json = load_config(args, scan_defaults());
    zetalab::ScanConfig config = zetalab::scan_config_from_json(config_json);
    if (args.seed_set) config.seed = args.seed;
    if (config.workers == 0) config.workers = default_workers(args);
    const auto result = zetalab::scan_density(config);
    for (const auto& e : result.epsilons)
        std::cout << "epsilon=" << e.epsilon << "  hits=" << e.hit_count
                  << "  density=" << format_sig(e.density) << "\n";
    Json summary{{"command", "scan"},
                 {"seed", config.seed},
                 {"config", config_json},
                 {"summary", zetalab::scan_summary_to_json(result)}};
    if (!args.dump_path.empty()) {
        std::ostringstream dump;
        dump << "k\tmax_sup";
        for (const auto& label : result.component_labels) dump << "\t" << label;
        dump << "\n";
        for (std::size_t k = 0; k < result.per_k_max_sup.size(); ++k) {
            dump << k << "\t" << format_sig(result.per_k_max_sup[k]);
            for (const auto& comp : result.per_component) dump << "\t" << format_sig(comp[k]);
            dump << "\n";
        }
        write_dump(args.dump_path, dump.str());
    }
    if (!args.density_dump_path.empty()) {
        std::ostringstream dump;
        dump << "epsilon\tdensity\n";
        for (const auto& e : result.epsilons)
            dump << format_sig(e.epsilon) << "\t" << format_sig(e.density) << "\n";
        write_dump(args.density_dump_path, dump.str());
    }
    if (!args.histogram_dump_path.empty()) {
        const auto hist = zetalab::scan_profile(result, args.histogram_bins);
        std::ostringstream dump;
        dump << "bin_lo\tbin_hi\tcount\n";
        for (std::size_t b = 0; b < hist.counts.size(); ++b)
            dump << format_sig(hist.edges[b]) << "\t" << format_sig(hist.edges[b + 1]) << "\t"
                 << hist.counts[b] << "\n";
        write_dump(args.histogram_dump_path, dump.str());
    }
    emit(args, summary);
    return kExitOk;
}

int dispatch(const std::string& name, const CommonArgs& args) {
    if (args.dump_default) {
        Json defaults;
        if (name == "eval") defaults = eval_defaults();
        else if (name == "smooth") defaults = smooth_defaults();
        else if (name == "admissibility") defaults = admissibility_defaults();
        else if (name == "torus") defaults = torus_defaults();
        else if (name == "meanvalue") defaults = meanvalue_defaults();
        else defaults = scan_defaults();
        std::cout << defaults.dump(2) << "\n";
        return kExitOk;
    }
    if (name == "eval") return run_eval(args);
    if (name == "smooth") return run_smooth(args);
    if (name == "admissibility") return run_admissibility(args);
    if (name == "torus") return run_torus(args);
    if (name == "meanvalue") return run_meanvalue(args);
    return run_scan(args);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zetalab - discrete universality experiments for zeta-function tuples"};
    app.require_subcommand(1);

    const char* names[] = {"eval", "smooth", "admissibility", "torus", "meanvalue", "scan"};
    const char* descriptions[] = {
        "evaluate a zeta-function at one point",
        "smoothed truncations phi_n / zeta_n and their error ladder",
        "rank and linear-independence checks for a collection",
        "torus diagnostics: discrepancy, Weyl sums, rotation, moments",
        "mean square along a vertical segment",
        "universality shift scan and density estimate"};
    std::array<CommonArgs, 6> args;
    for (int i = 0; i < 6; ++i) {
        CLI::App* cmd = app.add_subcommand(names[i], descriptions[i]);
        add_common(cmd, args[i]);
        if (std::string(names[i]) == "scan") {
            cmd->add_option("--dump-density", args[i].density_dump_path,
                            "write the epsilon/density table to this file");
            cmd->add_option("--dump-histogram", args[i].histogram_dump_path,
                            "write the sup-norm histogram to this file");
            cmd->add_option("--histogram-bins", args[i].histogram_bins, "histogram bin count");
        }
    }

    CLI11_PARSE(app, argc, argv);

    for (int i = 0; i < 6; ++i) {
        if (app.get_subcommand(names[i])->parsed()) {
            try {
                return dispatch(names[i], args[i]);
            } catch (const zetalab::AdmissibilityError& e) {
                std::cerr << "admissibility failure: " << e.what() << "\n";
                return kExitAdmissibility;
            } catch (const zetalab::PoleError& e) {
                std::cerr << "evaluator error: " << e.what() << "\n";
                return kExitEvaluator;
            } catch (const zetalab::ConvergenceError& e) {
                std::cerr << "evaluator error: " << e.what() << "\n";
                return kExitEvaluator;
            } catch (const std::invalid_argument& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return kExitConfig;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
        }
    }
    return kExitConfig;
}
