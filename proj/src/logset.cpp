#include "zetalab/logset.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "zetalab/primes.hpp"

namespace zetalab {

LogEntry make_log_rational_entry(std::string label, double scale, BigInt num, BigInt den) {
    if (num.sign() <= 0 || den.sign() <= 0)
        throw std::invalid_argument("LogEntry: rational must be positive");
    LogEntry e;
    e.label = std::move(label);
    e.kind = LogEntry::Kind::scaled_log_rational;
    e.scale = scale;
    e.value = scale * (std::log(num.to_double()) - std::log(den.to_double()));
    e.num = std::move(num);
    e.den = std::move(den);
    return e;
}

LogEntry make_pi_entry(std::string label, double scale, double divisor) {
    if (!(divisor != 0.0)) throw std::invalid_argument("LogEntry: zero pi divisor");
    LogEntry e;
    e.label = std::move(label);
    e.kind = LogEntry::Kind::scaled_pi;
    e.scale = scale;
    e.pi_divisor = divisor;
    e.value = scale * kPi / divisor;
    return e;
}

LogEntry make_log_shifted_entry(std::string label, double scale, std::uint64_t m, double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("LogEntry: alpha must lie in (0, 1)");
    int e2 = 0;
    const double frac = std::frexp(alpha, &e2);  // alpha = frac * 2^{e2}, e2 <= 0
    const long long mant = static_cast<long long>(std::ldexp(frac, 53));
    const unsigned down = static_cast<unsigned>(53 - e2);
    // m + alpha = (m * 2^down + mant) / 2^down, exactly.
    BigInt num = (BigInt::from_uint64(m) << down) + BigInt(mant);
    BigInt den = BigInt(1) << down;
    return make_log_rational_entry(std::move(label), scale, std::move(num), std::move(den));
}

FixedReal entry_value_fixed(const LogEntry& entry, unsigned frac_bits) {
    if (entry.kind == LogEntry::Kind::scaled_pi) {
        const FixedReal pi = fixed_pi(frac_bits);
        const FixedReal scale = FixedReal::from_double(entry.scale, frac_bits);
        const FixedReal div = FixedReal::from_double(entry.pi_divisor, frac_bits);
        return scale * pi / div;
    }
    const FixedReal raw = fixed_log_rational(entry.num, entry.den, frac_bits);
    if (entry.scale == 1.0) return raw;
    return FixedReal::from_double(entry.scale, frac_bits) * raw;
}

void LogSet::validate() const {
    std::set<std::string> seen;
    for (const LogEntry& e : entries) {
        if (!std::isfinite(e.value)) throw std::invalid_argument("LogSet: non-finite value");
        if (!seen.insert(e.label).second)
            throw std::invalid_argument("LogSet: duplicate label " + e.label);
    }
}

LogSet build_log_set(const HurwitzCollection& collection, std::uint32_t p_cut,
                     std::uint32_t m_cut) {
    if (p_cut < 2 || m_cut < 2)
        throw std::invalid_argument("build_log_set: cuts must be >= 2");
    collection.validate();
    LogSet set;
    set.p_cut = p_cut;
    set.m_cut = m_cut;
    const DifferenceMode mode = collection.differences.mode;
    const double prime_scale = (mode == DifferenceMode::equal) ? 1.0 : collection.differences.h1;

    for (std::uint32_t p : primes_up_to(p_cut))
        set.entries.push_back(make_log_rational_entry("log_p" + std::to_string(p), prime_scale,
                                                      BigInt(static_cast<long long>(p)),
                                                      BigInt(1)));
    for (std::size_t j = 0; j < collection.families.size(); ++j) {
        const double alpha = collection.families[j].alpha;
        if (mode == DifferenceMode::per_sequence) {
            for (std::size_t l = 0; l < collection.families[j].sequences.size(); ++l) {
                const double scale = collection.differences.h2jl[j][l];
                for (std::uint64_t m = 0; m <= m_cut; ++m)
                    set.entries.push_back(make_log_shifted_entry(
                        "log_a" + std::to_string(j + 1) + "_s" + std::to_string(l + 1) + "_m" +
                            std::to_string(m),
                        scale, m, alpha));
            }
        } else {
            const double scale =
                (mode == DifferenceMode::equal) ? 1.0 : collection.differences.h2[j];
            for (std::uint64_t m = 0; m <= m_cut; ++m)
                set.entries.push_back(make_log_shifted_entry(
                    "log_a" + std::to_string(j + 1) + "_m" + std::to_string(m), scale, m, alpha));
        }
    }
    if (mode == DifferenceMode::equal)
        set.entries.push_back(make_pi_entry("two_pi_over_h", 2.0, collection.differences.h));
    else
        set.entries.push_back(make_pi_entry("pi", 1.0, 1.0));
    set.validate();
    return set;
}

}  // namespace zetalab
