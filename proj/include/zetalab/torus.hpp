// Finite-dimensional torus dynamics of the discrete shifts: trajectory
// points, the rotation by the generator, Weyl character sums, and star
// discrepancy of coordinate angle sequences.
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "zetalab/collection.hpp"
#include "zetalab/smoothing.hpp"

namespace zetalab {

// One Hurwitz-side torus factor: parameter alpha with its shift difference.
// equal / per-family collections contribute one factor per family; the
// per-sequence mode contributes one per attached sequence.
struct TorusFactor {
    double alpha = 0.5;
    double h = 1.0;
    std::size_t family = 0;
    std::size_t sequence = 0;  // meaningful in per-sequence mode only
};

std::vector<TorusFactor> torus_factors(const HurwitzCollection& collection);

// The point ((p^{-ik*h1} : p <= p_max), ((m+alpha_g)^{-ik*h_g} : m <= m_max))
// of the trajectory of the empirical measure.
TorusPoint trajectory_point(std::uint64_t k, const HurwitzCollection& collection,
                            std::uint32_t p_max, std::uint32_t m_max);

// Coordinatewise multiplication by the generator (the k = 1 point).
// Throws std::invalid_argument when the point's bounds do not match.
TorusPoint rotate(const TorusPoint& point, const HurwitzCollection& collection);

// A character of the finite torus: integer exponents on finitely many
// coordinates (k_p on the prime side, l_{m,g} per factor g).
struct CharacterIndex {
    std::map<std::uint32_t, int> prime_exponents;
    std::map<std::pair<std::size_t, std::uint32_t>, int> factor_exponents;  // (factor g, m)

    bool trivial() const { return prime_exponents.empty() && factor_exponents.empty(); }
};

// The rotation angle theta of chi along the trajectory:
// theta = h1 * sum k_p log p + sum_g h_g * l_{m,g} * log(m+alpha_g).
double character_angle(const CharacterIndex& chi, const HurwitzCollection& collection);

// (1/(N+1)) * sum_{k=0}^{N} chi(trajectory_point(k)) by direct compensated
// summation of the phases e^{-ik*theta}.
Complex weyl_sum(const CharacterIndex& chi, std::uint64_t N, const HurwitzCollection& collection);

// Geometric closed form e^{-iN*theta/2} sin((N+1)theta/2) / ((N+1) sin(theta/2)),
// valid for theta not a multiple of 2*pi; the oracle for weyl_sum.
Complex weyl_sum_closed_form(double theta, std::uint64_t N);

// Star discrepancy of a sequence in [0,1): exact O(n log n) sorted formula,
// or a 1000-bin approximation when exact = false.
double star_discrepancy_1d(std::vector<double> angles, bool exact = true);

}  // namespace zetalab
