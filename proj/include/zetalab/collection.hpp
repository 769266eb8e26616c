// The experimental tuple of the universality experiment: parameters alpha_j,
// the attached periodic sequences B_jl, and the common differences of the
// shift progressions (one shared h, one per family, or one per sequence).
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zetalab/periodic.hpp"
#include "zetalab/types.hpp"

namespace zetalab {

enum class DifferenceMode { equal, per_family, per_sequence };

struct Differences {
    DifferenceMode mode = DifferenceMode::equal;
    double h = 1.0;                            // equal mode
    double h1 = 1.0;                           // per_family / per_sequence
    std::vector<double> h2;                    // per_family: one per family
    std::vector<std::vector<double>> h2jl;     // per_sequence: [family][sequence]

    static Differences equal(double h);
    static Differences per_family(double h1, std::vector<double> h2);
    static Differences per_sequence(double h1, std::vector<std::vector<double>> h2jl);
};

struct HurwitzFamily {
    double alpha = 0.5;                     // in (0, 1), open by contract
    std::vector<PeriodicSequence> sequences;
};

struct HurwitzCollection {
    std::string label;
    std::vector<HurwitzFamily> families;
    Differences differences;

    std::size_t family_count() const { return families.size(); }
    // lambda = sum over families of the sequence count.
    std::size_t component_count() const;
    // Shift difference for the Euler-product component.
    double phi_difference() const;
    // Shift difference for Hurwitz component (j, l), 0-based indices.
    double hurwitz_difference(std::size_t j, std::size_t l) const;

    void validate() const;
};

// The k_j x l(j) matrix whose column l lists one full cycle of B_jl: row m
// (1-based, m = 1..k_j with k_j = lcm of the periods) holds the sequence
// value at index (m-1) mod period.
struct CoefficientMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Complex> entries;  // row-major

    Complex at(std::size_t row, std::size_t col) const { return entries[row * cols + col]; }
};

// j is 0-based here and everywhere in the API.
CoefficientMatrix build_Bj_matrix(const HurwitzCollection& collection, std::size_t j);

// Curated instances used by the experiments and the CLI; every preset
// satisfies rank B_j = l(j) and ships with a frozen no-small-relation
// report (see stored_preset_report in relation.hpp).
std::vector<HurwitzCollection> presets();
const HurwitzCollection& preset_by_label(const std::string& label);

}  // namespace zetalab
