// Bernoulli-number ratios used by the Euler-Maclaurin tail.
#pragma once

#include <cstddef>

namespace zetalab {

// B_{2k} / (2k)!  for k >= 1, via B_{2k}/(2k)! = (-1)^{k+1} * 2*zeta(2k) / (2*pi)^{2k}.
// Values are cached; thread-safe after first use of any index below kMaxBernoulliPairs.
inline constexpr std::size_t kMaxBernoulliPairs = 64;
double bernoulli_over_factorial(std::size_t k);

}  // namespace zetalab
