// Smoothed truncations phi_n, zeta_n with weights
//   v1(m,n) = exp(-(m/n)^{sigma0*}),  v2(m,n,alpha) = exp(-((m+alpha)/(n+alpha))^{sigma0*}),
// and their randomized variants twisted by a point on the product torus.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zetalab/euler_product.hpp"
#include "zetalab/periodic.hpp"
#include "zetalab/types.hpp"

namespace zetalab {

struct SmoothingParams {
    std::uint64_t n = 1000;
    double sigma0_star = 0.6;  // any value > 1/2 is admissible

    void validate() const;
};

double weight_v1(std::uint64_t m, const SmoothingParams& params);
double weight_v2(std::uint64_t m, double alpha_j, const SmoothingParams& params);

// Smallest truncation K with sum_{m>K} v1(m,n) m^{-1/2} below tol, from the
// super-exponential weight decay with a factor-2 safety margin.
std::size_t required_truncation(const SmoothingParams& params, double tol = 1e-8);

// A finite-dimensional point of the product torus: one unit complex per
// prime p <= p_max and, per component group j, one per index m <= m_max.
// omega1 extends multiplicatively to composite arguments; extensions are
// computed on demand, never stored.
struct TorusPoint {
    std::uint32_t p_max = 0;
    std::uint32_t m_max = 0;
    std::vector<std::uint32_t> primes;         // primes <= p_max, ascending
    std::vector<Complex> omega1;               // parallel to primes
    std::vector<std::vector<Complex>> omega2;  // [group][m], m = 0..m_max

    std::size_t groups() const { return omega2.size(); }
    // omega1 at a prime (throws if p not stored).
    Complex omega1_at_prime(std::uint32_t p) const;
    // Multiplicative extension to any m in [1, p_max-smooth range]; factors
    // m and multiplies the prime values (throws if a factor exceeds p_max).
    Complex omega1_extended(std::uint64_t m) const;
    // Vector of omega1(m) for m = 1..limit via a smallest-prime-factor sieve.
    std::vector<Complex> omega1_table(std::size_t limit) const;

    TorusPoint all_ones() const;
};

// Haar sampling: independent uniform angles for every stored coordinate,
// deterministic in the seed (draw order: primes ascending, then each group's
// indices ascending).
TorusPoint sample_omega(std::uint64_t seed, std::uint32_t p_max, std::uint32_t m_max,
                        std::size_t groups);

// phi_n(s) = sum_{m<=K} c_m * v1(m,n) * m^{-s}, optionally twisted by
// omega1(m).  Requires sigma > 1/2 and K >= required_truncation.
Complex phi_n(Complex s, const DirichletCoefficients& coeffs, const SmoothingParams& params,
              const TorusPoint* omega = nullptr, std::size_t K = 0);

// zeta_n(s, alpha; B) = sum_{m<=M} b_m * v2(m,n,alpha) * (m+alpha)^{-s},
// optionally twisted by omega2[group][m].
Complex zeta_n(Complex s, double alpha, const PeriodicSequence& seq, const SmoothingParams& params,
               const TorusPoint* omega = nullptr, std::size_t group = 0, std::size_t M = 0);

}  // namespace zetalab
