// Prime sieves and factorization helpers.
#pragma once

#include <cstdint>
#include <vector>

namespace zetalab {

// All primes p <= bound in increasing order.
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

// pi(x), the number of primes <= x.
std::size_t prime_count(std::uint32_t x);

// Smallest-prime-factor table for 0..bound (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_prime_factor_table(std::uint32_t bound);

bool is_prime(std::uint32_t n);

}  // namespace zetalab
