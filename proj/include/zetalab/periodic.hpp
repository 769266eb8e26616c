// Periodic sequences and the periodic Hurwitz zeta-function
// zeta(s, alpha; B) = sum_{m>=0} b_m (m+alpha)^{-s}.
#pragma once

#include <cstddef>
#include <vector>

#include "zetalab/types.hpp"

namespace zetalab {

// One period of a complex sequence.  The period is minimal by contract:
// validate() rejects sequences where a proper divisor of the period already
// repeats the values.
struct PeriodicSequence {
    std::vector<Complex> coeffs;  // b_0 .. b_{l-1}

    std::size_t period() const { return coeffs.size(); }
    Complex at(std::size_t m) const { return coeffs[m % coeffs.size()]; }

    // Throws std::invalid_argument on violation: empty, all zero, or
    // non-minimal period.
    void validate() const;
};

PeriodicSequence constant_one_sequence();

// Mean of one period, b = (1/l) * sum b_m; the residue of the simple pole
// at s = 1 (the function is entire iff b = 0).
Complex residue_b(const PeriodicSequence& seq);

// Evaluated through the period decomposition
//   zeta(s, alpha; B) = l^{-s} * sum_{q<l} b_q * hurwitz_zeta(s, (q+alpha)/l),
// so it inherits hurwitz_zeta's accuracy contract.
// Throws PoleError at s = 1 only when residue_b != 0.
Complex periodic_hurwitz_zeta(Complex s, double alpha, const PeriodicSequence& seq);

}  // namespace zetalab
