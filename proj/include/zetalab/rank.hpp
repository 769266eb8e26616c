// Numeric rank of the coefficient matrices via singular values.
#pragma once

#include <vector>

#include "zetalab/collection.hpp"

namespace zetalab {

// Singular values in descending order (complex Hermitian Jacobi on A^H A).
std::vector<double> singular_values(const CoefficientMatrix& matrix);

// Count of singular values above tol; tol <= 0 selects the default
// 1e-10 * (largest singular value).
std::size_t rank_check(const CoefficientMatrix& matrix, double tol = 0.0);

}  // namespace zetalab
