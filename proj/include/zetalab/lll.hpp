// All-integer LLL lattice reduction (delta = 3/4), the engine behind the
// integer-relation detector.  Exact BigInt arithmetic throughout; no
// floating-point Gram-Schmidt.
#pragma once

#include <vector>

#include "zetalab/bigint.hpp"

namespace zetalab {

using LatticeRow = std::vector<BigInt>;

// Reduces the row basis in place.  Rows must be linearly independent.
void lll_reduce(std::vector<LatticeRow>& basis);

// Exact squared Euclidean norm of a row.
BigInt row_norm_sq(const LatticeRow& row);

}  // namespace zetalab
