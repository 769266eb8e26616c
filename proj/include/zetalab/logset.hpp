// The sets of logarithms whose Q-linear independence is the admissibility
// hypothesis: {log p} u {log(m+alpha_j)} u {2pi/h} in equal-difference mode,
// {h1 log p} u {h2j log(m+alpha_j)} u {pi} with several differences.
// Entries keep a symbolic payload so the relation detector can re-evaluate
// them to arbitrary precision.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetalab/collection.hpp"
#include "zetalab/fixedreal.hpp"

namespace zetalab {

struct LogEntry {
    enum class Kind { scaled_log_rational, scaled_pi };

    std::string label;
    double value = 0.0;  // binary64 face, for display and sanity checks
    Kind kind = Kind::scaled_log_rational;
    double scale = 1.0;      // exact-double multiplier (a difference h, or the pi numerator)
    BigInt num, den;         // scaled_log_rational: value = scale * log(num/den)
    double pi_divisor = 1.0; // scaled_pi: value = scale * pi / pi_divisor
};

LogEntry make_log_rational_entry(std::string label, double scale, BigInt num, BigInt den);
LogEntry make_pi_entry(std::string label, double scale, double divisor);
// scale * log(m + alpha) with the double alpha expanded to its exact binary
// rational, so the high-precision value matches the binary64 parameter.
LogEntry make_log_shifted_entry(std::string label, double scale, std::uint64_t m, double alpha);

FixedReal entry_value_fixed(const LogEntry& entry, unsigned frac_bits);

struct LogSet {
    std::vector<LogEntry> entries;
    std::uint32_t p_cut = 0;
    std::uint32_t m_cut = 0;

    // Finite values, unique labels.
    void validate() const;
};

// Truncation of the paper's sets: primes p <= p_cut, indices m <= m_cut.
// Equal mode emits unscaled prime logs and the constant 2pi/h; the
// multi-difference modes emit h1-scaled prime logs and the constant pi;
// per-sequence mode scales each family's entries once per attached sequence.
LogSet build_log_set(const HurwitzCollection& collection, std::uint32_t p_cut,
                     std::uint32_t m_cut);

}  // namespace zetalab
