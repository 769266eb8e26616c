#include "zetalab/bernoulli.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "zetalab/types.hpp"

namespace zetalab {

namespace {

double zeta_even_integer(std::size_t two_k) {
    // Direct summation plus a low-order Euler-Maclaurin tail; relative error
    // below 1e-10 already at 2k = 2, far smaller beyond.
    const double s = static_cast<double>(two_k);
    double sum = 1.0;
    for (int n = 2; n <= 64; ++n) sum += std::pow(static_cast<double>(n), -s);
    const double N = 65.0;
    sum += std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s) +
           s * std::pow(N, -s - 1.0) / 12.0;
    return sum;
}

std::array<double, kMaxBernoulliPairs + 1> build_table() {
    std::array<double, kMaxBernoulliPairs + 1> table{};
    double two_pi_pow = 1.0;
    for (std::size_t k = 1; k <= kMaxBernoulliPairs; ++k) {
        two_pi_pow = (k == 1) ? kTwoPi * kTwoPi : two_pi_pow * kTwoPi * kTwoPi;
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        table[k] = sign * 2.0 * zeta_even_integer(2 * k) / two_pi_pow;
    }
    return table;
}

}  // namespace

double bernoulli_over_factorial(std::size_t k) {
    static const std::array<double, kMaxBernoulliPairs + 1> table = build_table();
    if (k == 0 || k > kMaxBernoulliPairs)
        throw std::out_of_range("bernoulli_over_factorial: index out of range");
    return table[k];
}

}  // namespace zetalab
