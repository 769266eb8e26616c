#include "zetalab/primes.hpp"

namespace zetalab {

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
    std::vector<std::uint32_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (composite[p]) continue;
        out.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
    }
    return out;
}

std::size_t prime_count(std::uint32_t x) { return primes_up_to(x).size(); }

std::vector<std::uint32_t> smallest_prime_factor_table(std::uint32_t bound) {
    std::vector<std::uint32_t> spf(bound + 1, 0);
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (spf[p] != 0) continue;
        for (std::uint64_t q = p; q <= bound; q += p)
            if (spf[q] == 0) spf[q] = static_cast<std::uint32_t>(p);
    }
    return spf;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace zetalab
