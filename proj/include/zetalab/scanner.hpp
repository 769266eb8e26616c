// The universality experiment: scan discrete shifts k = 0..N, measure
// sup-norm distances of the shifted tuple to target functions over compact
// grids, and estimate the density of epsilon-approximating shifts.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "zetalab/collection.hpp"
#include "zetalab/euler_product.hpp"
#include "zetalab/relation.hpp"
#include "zetalab/types.hpp"

namespace zetalab {

struct RectangleShape {
    double sigma_lo, sigma_hi, t_lo, t_hi;
};
struct DiskShape {
    Complex center;
    double radius;
};
using GridShape = std::variant<RectangleShape, DiskShape>;

struct CompactSetGrid {
    GridShape shape;
    double resolution = 0.01;
    StripRegion ambient;
    std::vector<Complex> points;
};

// Regular lattice with spacing <= resolution covering the shape, endpoints
// included.  Requires the shape strictly inside the ambient strip with
// margin >= resolution; rejects shapes containing the pole point s = 1.
CompactSetGrid grid_compact(const GridShape& shape, double resolution, const StripRegion& ambient);

struct DirichletPolynomialTarget {
    std::vector<Complex> coeffs;  // sum_{k<=len} a_k k^{-s}
};
struct PolynomialTarget {
    std::vector<Complex> coeffs;  // sum c_i s^i
};
struct ExpPolynomialTarget {
    std::vector<Complex> inner;   // exp(sum c_i s^i); nonvanishing by construction
};
struct SelfShiftTarget {
    double delta = 0.0;           // the component's own value at s + i*delta
};
using TargetKind =
    std::variant<DirichletPolynomialTarget, PolynomialTarget, ExpPolynomialTarget, SelfShiftTarget>;

struct TargetFunction {
    TargetKind kind;
    bool nonvanishing_required = false;

    bool is_self_shift() const { return std::holds_alternative<SelfShiftTarget>(kind); }
    // Value at s; throws for self_shift kinds (they need the component).
    Complex evaluate(Complex s) const;
};

// Validates the nonvanishing certificate: exp_polynomial targets certify by
// construction; other kinds need a grid where min |f| stays above 1e-9.
TargetFunction make_target(TargetKind kind, bool nonvanishing_required = false,
                           const CompactSetGrid* grid = nullptr);

// max over grid points of |evaluator(s + i*shift) - target(s)|.
double sup_distance(const std::function<Complex(Complex)>& evaluator, double shift,
                    const TargetFunction& target, const CompactSetGrid& grid);

enum class PhiEvalMode {
    continued,      // analytic continuation (implemented for the riemann spec)
    smoothed,       // phi_n truncation, any sigma > 1/2
    dirichlet_sum,  // plain truncated sum, sigma > 1 only
};

struct ScanConfig {
    HurwitzCollection collection;
    EulerProductSpec spec;
    PhiEvalMode phi_mode = PhiEvalMode::continued;
    CompactSetGrid k1;
    std::vector<std::vector<CompactSetGrid>> k2;  // [family][sequence]
    TargetFunction f1;
    std::vector<std::vector<TargetFunction>> f2;
    std::vector<double> epsilons{0.2, 0.5, 0.8, 1.0};
    std::size_t n_shifts = 100000;  // N; k runs 0..N
    std::size_t workers = 0;        // 0 -> hardware concurrency
    bool override_admissibility = false;
    AdmissibilityOptions admissibility{};
    std::uint64_t smoothing_n = 1000;  // smoothed phi mode
    double sigma0_star = 0.6;
    std::size_t dirichlet_truncation = 100000;  // dirichlet_sum phi mode
    std::uint64_t seed = 0;                     // echoed into results
};

struct EpsilonSummary {
    double epsilon = 0.0;
    std::size_t hit_count = 0;
    double density = 0.0;
    std::vector<std::uint64_t> first_hits;  // at most 100 hitting k values
};

struct ScanResult {
    std::size_t n_shifts = 0;
    std::vector<std::string> component_labels;
    std::vector<double> per_k_max_sup;               // length N+1
    std::vector<std::vector<double>> per_component;  // [component][k]
    std::vector<EpsilonSummary> epsilons;
    std::string collection_label, spec_label, mode;
    std::uint64_t seed = 0;
    std::size_t workers_used = 0;
};

// Deterministic given the config: per-k values are computed blockwise and do
// not depend on the worker count.  Throws AdmissibilityError when the
// rank/relation hypotheses fail and no override was requested.
ScanResult scan_density(const ScanConfig& config);

struct Histogram {
    std::vector<double> edges;        // bins + 1, equally spaced from 0 to max
    std::vector<std::size_t> counts;  // bins
};

Histogram scan_profile(const ScanResult& result, std::size_t bins);

}  // namespace zetalab
