// Desk-scale surrogate for weak convergence of the shift distribution:
// first and second moments of the shift sample {Z_n(s + ik h)} against the
// Monte Carlo sample {Z_n(s, omega)} with omega drawn from the Haar measure.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetalab/collection.hpp"
#include "zetalab/euler_product.hpp"
#include "zetalab/smoothing.hpp"

namespace zetalab {

struct MomentComponent {
    std::string label;
    Complex mean_shift{0.0, 0.0};
    Complex mean_mc{0.0, 0.0};
    double second_moment_shift = 0.0;  // E |X|^2
    double second_moment_mc = 0.0;
    double abs_mean_shift = 0.0;       // E |X|
    double abs_mean_mc = 0.0;
    double se_mean = 0.0;              // combined standard error for the mean gate
    double se_second = 0.0;
    bool mean_ok = false;
    bool second_ok = false;
};

struct MomentReport {
    std::size_t sample_count_shift = 0;
    std::size_t sample_count_mc = 0;
    double sigma = 1.5;
    std::uint64_t n_smooth = 0;
    std::uint64_t seed = 0;
    double tolerance_factor = 3.0;
    std::vector<MomentComponent> components;
    bool all_ok = false;
    // Raw samples, populated only when CompareOptions::keep_samples is set;
    // [component][index], components ordered as in `components`.
    std::vector<std::vector<Complex>> shift_samples;
    std::vector<std::vector<Complex>> mc_samples;
};

struct CompareOptions {
    double sigma = 1.5;             // default inside the absolute-convergence region
    std::size_t shift_count = 10000;  // N
    std::size_t mc_count = 10000;
    std::uint64_t n_smooth = 50;
    double sigma0_star = 0.6;
    std::uint64_t seed = 1;
    double tolerance_factor = 3.0;  // moment gates at this many standard errors
    bool keep_samples = false;      // retain the raw per-k / per-sample values
};

// Shift sample: phi_n(sigma + ik h1) and zeta_n(sigma + ik h_g, alpha; B)
// for k = 0..N-1.  Monte Carlo sample: the same functionals twisted by
// independent Haar points (one seed stream per sample index).  Gates compare
// the two samples' moments at tolerance_factor standard errors, with each
// sample's dispersion estimated empirically (the shift sample is treated as
// if independent; its deviations are deterministic, the scale is a surrogate).
MomentReport compare_distributions(const HurwitzCollection& collection,
                                   const EulerProductSpec& spec, const CompareOptions& options);

}  // namespace zetalab
