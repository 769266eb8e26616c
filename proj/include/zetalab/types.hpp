// Core scalar types, regions and error categories shared by every module.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zetalab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Vertical strip a < sigma < b clipped to |t| <= t_bound.
struct StripRegion {
    double sigma_lo = 0.0;
    double sigma_hi = 1.0;
    double t_bound = 1.0;

    bool contains(Complex s, double margin = 0.0) const {
        return s.real() > sigma_lo + margin && s.real() < sigma_hi - margin &&
               std::abs(s.imag()) <= t_bound - margin;
    }
};

// Thrown when an evaluator is asked for its value exactly at a simple pole.
class PoleError : public std::domain_error {
  public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a series / product is evaluated outside its convergence region
// or a truncation cannot reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
  public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by scan_density when the admissibility hypotheses fail and no
// override was requested.
class AdmissibilityError : public std::runtime_error {
  public:
    explicit AdmissibilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zetalab
