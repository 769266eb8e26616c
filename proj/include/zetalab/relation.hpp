// Lattice-reduction-based integer-relation detection: the numeric
// certificate for the Q-linear-independence admissibility hypothesis.
// found = false means no relation with coefficients up to the bound was
// detectable at the working precision; it certifies a search, not a proof.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/collection.hpp"
#include "zetalab/logset.hpp"

namespace zetalab {

struct RelationReport {
    bool found = false;
    std::vector<std::int64_t> coefficients;  // when found, aligned with subset_labels
    std::vector<std::string> subset_labels;  // entries the detector examined last / matched
    double residual = 0.0;                   // |sum c_i x_i| at working precision
    int precision_digits = 0;
    std::int64_t max_coeff_bound = 0;
    std::size_t subsets_examined = 0;
};

// Runs the detector on every subset of the given size in lexicographic
// order, or on a deterministic stride sample of at most `subset_cap`
// subsets when there are more.  A candidate is accepted when its exact
// residual satisfies |sum c_i x_i| <= 10^{-(precision_digits-2)} * ||c||_2.
// Throws std::invalid_argument when precision_digits < 30 or the precision
// cannot discriminate residuals at the requested coefficient bound.
RelationReport relation_search(const LogSet& set, std::size_t subset_size, int precision_digits,
                               std::int64_t max_coeff, std::size_t subset_cap = 512);

struct FamilyRankResult {
    std::size_t rank = 0;
    std::size_t required = 0;  // l(j)
    bool pass = false;
};

struct AdmissibilityOptions {
    std::uint32_t p_cut = 20;
    std::uint32_t m_cut = 20;
    std::size_t subset_size = 4;
    int precision_digits = 50;
    std::int64_t max_coeff = 10000;
    std::size_t subset_cap = 512;
};

struct AdmissibilityReport {
    std::vector<FamilyRankResult> ranks;
    RelationReport relation;
    bool admissible = false;  // all ranks pass and no relation found
};

AdmissibilityReport check_admissibility(const HurwitzCollection& collection,
                                        const AdmissibilityOptions& options = {});

// Frozen build-time reports for the shipped presets (see presets() in
// collection.hpp); unit tests re-derive them.
RelationReport stored_preset_report(const std::string& label);

}  // namespace zetalab
