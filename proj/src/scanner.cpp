#include "zetalab/scanner.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "zetalab/hurwitz.hpp"
#include "zetalab/periodic.hpp"
#include "zetalab/shifted_series.hpp"
#include "zetalab/smoothing.hpp"
#include "zetalab/torus.hpp"

namespace zetalab {

namespace {

struct Bounds {
    double sigma_lo, sigma_hi, t_lo, t_hi;
};

Bounds shape_bounds(const GridShape& shape) {
    if (std::holds_alternative<RectangleShape>(shape)) {
        const auto& r = std::get<RectangleShape>(shape);
        return {r.sigma_lo, r.sigma_hi, r.t_lo, r.t_hi};
    }
    const auto& d = std::get<DiskShape>(shape);
    return {d.center.real() - d.radius, d.center.real() + d.radius, d.center.imag() - d.radius,
            d.center.imag() + d.radius};
}

std::vector<double> lattice_axis(double lo, double hi, double resolution) {
    const double span = hi - lo;
    if (span <= 0.0) return {lo};
    const std::size_t n =
        static_cast<std::size_t>(std::ceil(span / resolution - 1e-9)) + 1;
    std::vector<double> axis(n);
    for (std::size_t i = 0; i < n; ++i)
        axis[i] = lo + span * static_cast<double>(i) / static_cast<double>(n - 1);
    return axis;
}

}  // namespace

CompactSetGrid grid_compact(const GridShape& shape, double resolution,
                            const StripRegion& ambient) {
    if (!(resolution > 0.0)) throw std::invalid_argument("grid_compact: resolution must be > 0");
    const Bounds b = shape_bounds(shape);
    if (b.sigma_lo < ambient.sigma_lo + resolution - 1e-12 ||
        b.sigma_hi > ambient.sigma_hi - resolution + 1e-12 ||
        b.t_lo < -ambient.t_bound + resolution - 1e-12 ||
        b.t_hi > ambient.t_bound - resolution + 1e-12)
        throw std::invalid_argument(
            "grid_compact: shape must sit inside the ambient strip with margin >= resolution");
    // Guard against shapes straddling the pole point (relevant for wide
    // ambient strips only; the default strips exclude sigma = 1 anyway).
    if (b.sigma_lo <= 1.0 && 1.0 <= b.sigma_hi && b.t_lo <= 0.0 && 0.0 <= b.t_hi) {
        bool contains_pole = true;
        if (std::holds_alternative<DiskShape>(shape))
            contains_pole =
                std::abs(Complex(1.0, 0.0) - std::get<DiskShape>(shape).center) <=
                std::get<DiskShape>(shape).radius;
        if (contains_pole) throw std::invalid_argument("grid_compact: shape contains the pole s=1");
    }

    CompactSetGrid grid;
    grid.shape = shape;
    grid.resolution = resolution;
    grid.ambient = ambient;
    const std::vector<double> xs = lattice_axis(b.sigma_lo, b.sigma_hi, resolution);
    const std::vector<double> ys = lattice_axis(b.t_lo, b.t_hi, resolution);
    for (double y : ys)
        for (double x : xs) {
            const Complex z(x, y);
            if (std::holds_alternative<DiskShape>(shape)) {
                const auto& d = std::get<DiskShape>(shape);
                if (std::abs(z - d.center) > d.radius + 1e-12) continue;
            }
            grid.points.push_back(z);
        }
    if (grid.points.empty()) throw std::invalid_argument("grid_compact: empty grid");
    return grid;
}

Complex TargetFunction::evaluate(Complex s) const {
    if (std::holds_alternative<DirichletPolynomialTarget>(kind)) {
        const auto& t = std::get<DirichletPolynomialTarget>(kind);
        Complex sum(0.0, 0.0);
        for (std::size_t k = 1; k <= t.coeffs.size(); ++k)
            sum += t.coeffs[k - 1] * std::exp(-s * std::log(static_cast<double>(k)));
        return sum;
    }
    if (std::holds_alternative<PolynomialTarget>(kind)) {
        const auto& t = std::get<PolynomialTarget>(kind);
        Complex value(0.0, 0.0);
        for (std::size_t i = t.coeffs.size(); i-- > 0;) value = value * s + t.coeffs[i];
        return value;
    }
    if (std::holds_alternative<ExpPolynomialTarget>(kind)) {
        const auto& t = std::get<ExpPolynomialTarget>(kind);
        Complex inner(0.0, 0.0);
        for (std::size_t i = t.inner.size(); i-- > 0;) inner = inner * s + t.inner[i];
        return std::exp(inner);
    }
    throw std::logic_error("TargetFunction: self-shift targets are evaluated by the component");
}

TargetFunction make_target(TargetKind kind, bool nonvanishing_required,
                           const CompactSetGrid* grid) {
    TargetFunction target{std::move(kind), nonvanishing_required};
    if (!nonvanishing_required) return target;
    if (std::holds_alternative<ExpPolynomialTarget>(target.kind)) return target;  // by construction
    if (std::holds_alternative<SelfShiftTarget>(target.kind))
        throw std::invalid_argument("make_target: self-shift targets cannot certify nonvanishing");
    if (grid == nullptr)
        throw std::invalid_argument(
            "make_target: nonvanishing certificate needs a grid for this target kind");
    double min_mod = 1e300;
    for (const Complex& s : grid->points) min_mod = std::min(min_mod, std::abs(target.evaluate(s)));
    if (min_mod <= 1e-9)
        throw std::invalid_argument("make_target: target vanishes on the grid (min modulus " +
                                    std::to_string(min_mod) + ")");
    return target;
}

double sup_distance(const std::function<Complex(Complex)>& evaluator, double shift,
                    const TargetFunction& target, const CompactSetGrid& grid) {
    double sup = 0.0;
    for (const Complex& s : grid.points) {
        const Complex shifted = evaluator(s + Complex(0.0, shift));
        const Complex value = target.is_self_shift()
                                  ? evaluator(s + Complex(0.0, std::get<SelfShiftTarget>(target.kind).delta))
                                  : target.evaluate(s);
        sup = std::max(sup, std::abs(shifted - value));
    }
    return sup;
}

namespace {

// One scan component: a continued zeta-type series split into residue
// classes (b_q, stride, offset), or a finite weighted progression per grid
// point (the smoothed / truncated phi modes).
struct ComponentPlan {
    std::string label;
    double delta = 1.0;
    std::vector<Complex> points;
    std::vector<Complex> target_values;  // f(s_g)

    // continued recipe
    struct Residue {
        Complex weight;
        double stride;
        double offset;
    };
    std::vector<Residue> residues;

    // finite recipe (per grid point): shared logs, weights per point
    std::vector<double> finite_logs;
    std::vector<std::vector<Complex>> finite_weights;  // [point][term]

    bool finite() const { return !finite_logs.empty(); }
};

// Per-worker live state for a component.
struct ComponentState {
    const ComponentPlan* plan = nullptr;
    std::vector<std::unique_ptr<ArithmeticZetaProgression>> residues;
    std::vector<std::unique_ptr<DirichletProgression>> finite;
    std::vector<Complex> scratch, accum;

    explicit ComponentState(const ComponentPlan& p) : plan(&p) {
        if (p.finite()) {
            for (const auto& w : p.finite_weights)
                finite.push_back(std::make_unique<DirichletProgression>(p.finite_logs, w, p.delta));
        } else {
            for (const auto& r : p.residues)
                residues.push_back(std::make_unique<ArithmeticZetaProgression>(
                    r.stride, r.offset, p.points, p.delta));
        }
        scratch.resize(p.points.size());
        accum.resize(p.points.size());
    }

    double sup_at(std::size_t k) {
        const std::size_t npts = plan->points.size();
        if (plan->finite()) {
            double sup = 0.0;
            for (std::size_t g = 0; g < npts; ++g)
                sup = std::max(sup, std::abs(finite[g]->value_at(k) - plan->target_values[g]));
            return sup;
        }
        std::fill(accum.begin(), accum.end(), Complex(0.0, 0.0));
        for (std::size_t q = 0; q < residues.size(); ++q) {
            residues[q]->values_at(k, scratch.data());
            const Complex w = plan->residues[q].weight;
            for (std::size_t g = 0; g < npts; ++g) accum[g] += w * scratch[g];
        }
        double sup = 0.0;
        for (std::size_t g = 0; g < npts; ++g)
            sup = std::max(sup, std::abs(accum[g] - plan->target_values[g]));
        return sup;
    }
};

std::function<Complex(Complex)> phi_evaluator(const ScanConfig& config,
                                              const DirichletCoefficients* coeffs) {
    switch (config.phi_mode) {
        case PhiEvalMode::continued:
            return [](Complex s) { return hurwitz_zeta(s, 1.0); };
        case PhiEvalMode::smoothed: {
            const SmoothingParams params{config.smoothing_n, config.sigma0_star};
            return [coeffs, params](Complex s) { return phi_n(s, *coeffs, params); };
        }
        case PhiEvalMode::dirichlet_sum: {
            return [coeffs](Complex s) {
                Complex sum(0.0, 0.0);
                for (std::size_t k = coeffs->truncation(); k >= 1; --k) {
                    const Complex c = coeffs->values[k - 1];
                    if (c != Complex(0.0, 0.0))
                        sum += c * std::exp(-s * std::log(static_cast<double>(k)));
                }
                return sum;
            };
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

ScanResult scan_density(const ScanConfig& config) {
    config.collection.validate();
    const std::size_t families = config.collection.families.size();
    if (config.k2.size() != families || config.f2.size() != families)
        throw std::invalid_argument("scan_density: grid/target shape mismatch with collection");
    for (std::size_t j = 0; j < families; ++j) {
        const std::size_t l_count = config.collection.families[j].sequences.size();
        if (config.k2[j].size() != l_count || config.f2[j].size() != l_count)
            throw std::invalid_argument("scan_density: grid/target shape mismatch with collection");
    }
    if (config.epsilons.empty()) throw std::invalid_argument("scan_density: no epsilons");
    if (config.phi_mode == PhiEvalMode::continued && config.spec.label != "riemann")
        throw std::invalid_argument(
            "scan_density: analytic continuation is implemented for the riemann spec only; "
            "use the smoothed or dirichlet_sum mode");
    if (config.phi_mode == PhiEvalMode::dirichlet_sum) {
        for (const Complex& s : config.k1.points)
            if (s.real() <= 1.0)
                throw std::invalid_argument(
                    "scan_density: dirichlet_sum mode requires K1 inside sigma > 1");
    }
    if (!config.f1.nonvanishing_required &&
        !std::holds_alternative<SelfShiftTarget>(config.f1.kind) &&
        !std::holds_alternative<ExpPolynomialTarget>(config.f1.kind)) {
        // f1 must be certified nonvanishing (H_0^c class); re-check here.
        double min_mod = 1e300;
        for (const Complex& s : config.k1.points)
            min_mod = std::min(min_mod, std::abs(config.f1.evaluate(s)));
        if (min_mod <= 1e-9)
            throw std::invalid_argument("scan_density: f1 vanishes on K1");
    }

    if (!config.override_admissibility) {
        const AdmissibilityReport report =
            check_admissibility(config.collection, config.admissibility);
        if (!report.admissible)
            throw AdmissibilityError(
                "scan_density: admissibility hypotheses failed (rank or relation); "
                "pass the override flag to scan anyway");
    }

    // Coefficients are needed by the smoothed / truncated phi modes.
    DirichletCoefficients coeffs;
    if (config.phi_mode == PhiEvalMode::smoothed) {
        const SmoothingParams params{config.smoothing_n, config.sigma0_star};
        coeffs = dirichlet_coefficients(config.spec, required_truncation(params));
    } else if (config.phi_mode == PhiEvalMode::dirichlet_sum) {
        coeffs = dirichlet_coefficients(config.spec, config.dirichlet_truncation);
    }

    // ---- component plans -------------------------------------------------
    std::vector<ComponentPlan> plans;
    {
        ComponentPlan phi;
        phi.label = "phi";
        phi.delta = config.collection.phi_difference();
        phi.points = config.k1.points;
        if (config.phi_mode == PhiEvalMode::continued) {
            phi.residues.push_back({Complex(1.0, 0.0), 1.0, 1.0});
        } else {
            const bool smoothed = config.phi_mode == PhiEvalMode::smoothed;
            const SmoothingParams params{config.smoothing_n, config.sigma0_star};
            const std::size_t K = coeffs.truncation();
            for (std::size_t m = 1; m <= K; ++m)
                if (coeffs.values[m - 1] != Complex(0.0, 0.0))
                    phi.finite_logs.push_back(std::log(static_cast<double>(m)));
            phi.finite_weights.resize(phi.points.size());
            for (std::size_t g = 0; g < phi.points.size(); ++g) {
                const Complex s = phi.points[g];
                phi.finite_weights[g].reserve(phi.finite_logs.size());
                for (std::size_t m = 1; m <= K; ++m) {
                    const Complex c = coeffs.values[m - 1];
                    if (c == Complex(0.0, 0.0)) continue;
                    const double v = smoothed ? weight_v1(m, params) : 1.0;
                    phi.finite_weights[g].push_back(
                        c * v * std::exp(-s * std::log(static_cast<double>(m))));
                }
            }
        }
        // Target values on the grid.
        phi.target_values.resize(phi.points.size());
        if (config.f1.is_self_shift()) {
            const auto eval = phi_evaluator(config, &coeffs);
            const double delta = std::get<SelfShiftTarget>(config.f1.kind).delta;
            for (std::size_t g = 0; g < phi.points.size(); ++g)
                phi.target_values[g] = eval(phi.points[g] + Complex(0.0, delta));
        } else {
            for (std::size_t g = 0; g < phi.points.size(); ++g)
                phi.target_values[g] = config.f1.evaluate(phi.points[g]);
        }
        plans.push_back(std::move(phi));
    }
    for (std::size_t j = 0; j < families; ++j) {
        const HurwitzFamily& family = config.collection.families[j];
        for (std::size_t l = 0; l < family.sequences.size(); ++l) {
            const PeriodicSequence& seq = family.sequences[l];
            ComponentPlan plan;
            plan.label = "zeta_f" + std::to_string(j + 1) + "_s" + std::to_string(l + 1);
            plan.delta = config.collection.hurwitz_difference(j, l);
            plan.points = config.k2[j][l].points;
            const double dl = static_cast<double>(seq.period());
            for (std::size_t q = 0; q < seq.period(); ++q) {
                if (seq.coeffs[q] == Complex(0.0, 0.0)) continue;
                plan.residues.push_back(
                    {seq.coeffs[q], dl, static_cast<double>(q) + family.alpha});
            }
            plan.target_values.resize(plan.points.size());
            const TargetFunction& f = config.f2[j][l];
            if (f.is_self_shift()) {
                const double delta = std::get<SelfShiftTarget>(f.kind).delta;
                for (std::size_t g = 0; g < plan.points.size(); ++g)
                    plan.target_values[g] = periodic_hurwitz_zeta(
                        plan.points[g] + Complex(0.0, delta), family.alpha, seq);
            } else {
                for (std::size_t g = 0; g < plan.points.size(); ++g)
                    plan.target_values[g] = f.evaluate(plan.points[g]);
            }
            plans.push_back(std::move(plan));
        }
    }

    // ---- blockwise parallel scan ------------------------------------------
    const std::size_t total = config.n_shifts + 1;
    std::vector<std::vector<double>> per_component(plans.size(), std::vector<double>(total));
    const std::size_t blocks = (total + kProgressionBlock - 1) / kProgressionBlock;
    std::size_t workers = config.workers;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, blocks);

    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run_range = [&](std::size_t block_begin, std::size_t block_end) {
        try {
            std::vector<ComponentState> states;
            states.reserve(plans.size());
            for (const ComponentPlan& plan : plans) states.emplace_back(plan);
            for (std::size_t b = block_begin; b < block_end; ++b) {
                const std::size_t k_begin = b * kProgressionBlock;
                const std::size_t k_end = std::min(total, k_begin + kProgressionBlock);
                for (std::size_t k = k_begin; k < k_end; ++k)
                    for (std::size_t c = 0; c < states.size(); ++c)
                        per_component[c][k] = states[c].sup_at(k);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    if (workers <= 1) {
        run_range(0, blocks);
    } else {
        // Contiguous block ranges per worker: each evaluator grows its cut
        // monotonically, and values stay independent of the partition.
        std::vector<std::thread> pool;
        const std::size_t per_worker = (blocks + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * per_worker;
            const std::size_t hi = std::min(blocks, lo + per_worker);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    // ---- assemble ----------------------------------------------------------
    ScanResult result;
    result.n_shifts = config.n_shifts;
    result.seed = config.seed;
    result.workers_used = workers;
    result.collection_label = config.collection.label;
    result.spec_label = config.spec.label;
    result.mode = config.collection.differences.mode == DifferenceMode::equal ? "equal"
                  : config.collection.differences.mode == DifferenceMode::per_family
                      ? "per_family"
                      : "per_sequence";
    for (const ComponentPlan& plan : plans) result.component_labels.push_back(plan.label);
    result.per_component = std::move(per_component);
    result.per_k_max_sup.resize(total);
    for (std::size_t k = 0; k < total; ++k) {
        double worst = 0.0;
        for (const auto& comp : result.per_component) worst = std::max(worst, comp[k]);
        result.per_k_max_sup[k] = worst;
    }
    for (double eps : config.epsilons) {
        EpsilonSummary summary;
        summary.epsilon = eps;
        for (std::size_t k = 0; k < total; ++k) {
            if (result.per_k_max_sup[k] < eps) {
                ++summary.hit_count;
                if (summary.first_hits.size() < 100) summary.first_hits.push_back(k);
            }
        }
        summary.density = static_cast<double>(summary.hit_count) / static_cast<double>(total);
        result.epsilons.push_back(std::move(summary));
    }
    return result;
}

Histogram scan_profile(const ScanResult& result, std::size_t bins) {
    if (bins < 2) throw std::invalid_argument("scan_profile: bins must be >= 2");
    Histogram hist;
    double max_val = 0.0;
    for (double v : result.per_k_max_sup) max_val = std::max(max_val, v);
    hist.edges.resize(bins + 1);
    hist.counts.assign(bins, 0);
    for (std::size_t b = 0; b <= bins; ++b)
        hist.edges[b] = max_val * static_cast<double>(b) / static_cast<double>(bins);
    for (double v : result.per_k_max_sup) {
        std::size_t b = max_val > 0.0
                            ? static_cast<std::size_t>(v / max_val * static_cast<double>(bins))
                            : 0;
        if (b >= bins) b = bins - 1;  // top edge inclusive
        ++hist.counts[b];
    }
    return hist;
}

}  // namespace zetalab
