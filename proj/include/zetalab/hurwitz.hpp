// Hurwitz zeta-function zeta(s, a) = sum_{m>=0} (m+a)^{-s}, continued past
// the abscissa of convergence by the Euler-Maclaurin formula.
#pragma once

#include "zetalab/types.hpp"

namespace zetalab {

// Requirements: a in (0, 1], s != 1.  Absolute error <= 1e-10 for
// sigma >= 0.4 and |t| <= 1e4 (cut M = max(ceil|t|+10, 20), Bernoulli
// correction of base order 12 extended adaptively).
// Throws PoleError at s == 1 and std::invalid_argument for bad a.
Complex hurwitz_zeta(Complex s, double a);

namespace detail {
// Euler-Maclaurin with an explicit cut; used by hurwitz_zeta and by the
// progression evaluator's accuracy tests.  max_pairs counts Bernoulli
// correction pairs B_2..B_{2*max_pairs}.
Complex hurwitz_zeta_em(Complex s, double a, long cut, int max_pairs);
}  // namespace detail

}  // namespace zetalab
