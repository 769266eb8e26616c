// Polynomial Euler products over primes, their Dirichlet coefficients, and
// the Steuding prime mean-square statistic.
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "zetalab/types.hpp"

namespace zetalab {

// One factor (1 - a * p^{-s*f})^{-1} of a local Euler polynomial.
struct LocalFactorTerm {
    Complex a;
    std::uint32_t f = 1;
};

struct LocalFactor {
    std::uint32_t prime = 2;
    std::vector<LocalFactorTerm> terms;  // degree g = terms.size()
};

// Data defining a function of the polynomial-Euler-product class: local
// factors per prime plus the growth constants bounding degree and
// coefficient size (g <= c1 * p^growth_alpha, |a| <= p^growth_beta).
// The shifted function phi(s) = phi~(s + growth_alpha + growth_beta) is the
// object all evaluators work with.
struct EulerProductSpec {
    std::string label;
    double growth_alpha = 0.0;
    double growth_beta = 0.0;
    double c1 = 1.0;
    std::vector<LocalFactor> local_factors;  // strictly increasing primes

    // Degree/coefficient growth bounds and prime ordering.
    void validate() const;
    // Largest prime covered by the stored factors (0 if none).
    std::uint32_t max_prime() const;
    const LocalFactor* factor_for(std::uint32_t p) const;
};

struct DirichletCoefficients {
    std::vector<Complex> values;  // c_1 .. c_K at indices 0 .. K-1
    std::size_t truncation() const { return values.size(); }
    Complex at(std::size_t k) const { return values[k - 1]; }
};

// Built-in instances.  The class-M continuation conditions are analytic
// facts about each instance, not runtime-checkable; these presets are the
// documented cases.  sigma_star is the known mean-square abscissa where
// available (0.5 for the Riemann instance), negative when unknown.
EulerProductSpec riemann_spec(std::uint32_t max_prime = 100000);
EulerProductSpec zeta_squared_spec(std::uint32_t max_prime = 100000);
EulerProductSpec unit_spec(std::uint32_t max_prime = 100);
double sigma_star_for(const EulerProductSpec& spec);  // -1 when unknown

// Coefficients c_1..c_K of phi(s) = sum c_k k^{-s}: expand every local
// factor as a power series in p^{-s}, convolve multiplicatively, and apply
// the shift c_k = (expansion coefficient) * k^{-(growth_alpha+growth_beta)}.
// Throws ConvergenceError if a prime <= K has no stored factor.
DirichletCoefficients dirichlet_coefficients(const EulerProductSpec& spec, std::size_t K);

struct EulerProductMode {
    std::uint32_t max_prime;
};
struct DirichletSumMode {
    std::size_t truncation;
};
using MatsumotoMode = std::variant<EulerProductMode, DirichletSumMode>;

// phi(s) for sigma > 1, by truncated Euler product or truncated Dirichlet
// sum.  Throws ConvergenceError when sigma <= 1.
Complex matsumoto_eval(const EulerProductSpec& spec, Complex s, const MatsumotoMode& mode);

// Finite-x approximant of the Steuding constant kappa:
// (1/pi(x)) * sum_{p<=x} |a(p)|^2 with a(p) = c_p.
// Requires coeffs.truncation() >= x.
double steuding_kappa(const DirichletCoefficients& coeffs, const EulerProductSpec& spec, double x);

}  // namespace zetalab
