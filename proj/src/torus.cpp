#include "zetalab/torus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zetalab/primes.hpp"

namespace zetalab {

namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

Complex unit_power(long double log_base, double h, std::uint64_t k) {
    // base^{-ikh} = exp(-i * k*h*log(base)), angle reduced in long double.
    const long double angle = fmodl(static_cast<long double>(k) *
                                             static_cast<long double>(h) * log_base,
                                         kTwoPiL);
    return Complex(static_cast<double>(cosl(angle)), -static_cast<double>(sinl(angle)));
}

}  // namespace

std::vector<TorusFactor> torus_factors(const HurwitzCollection& collection) {
    std::vector<TorusFactor> factors;
    for (std::size_t j = 0; j < collection.families.size(); ++j) {
        if (collection.differences.mode == DifferenceMode::per_sequence) {
            for (std::size_t l = 0; l < collection.families[j].sequences.size(); ++l)
                factors.push_back({collection.families[j].alpha,
                                   collection.hurwitz_difference(j, l), j, l});
        } else {
            factors.push_back({collection.families[j].alpha, collection.hurwitz_difference(j, 0),
                               j, 0});
        }
    }
    return factors;
}

TorusPoint trajectory_point(std::uint64_t k, const HurwitzCollection& collection,
                            std::uint32_t p_max, std::uint32_t m_max) {
    if (p_max < 1 || m_max < 1)
        throw std::invalid_argument("trajectory_point: bounds must be >= 1");
    collection.validate();
    TorusPoint point;
    point.p_max = p_max;
    point.m_max = m_max;
    point.primes = primes_up_to(p_max);
    const double h1 = collection.phi_difference();
    point.omega1.reserve(point.primes.size());
    for (std::uint32_t p : point.primes)
        point.omega1.push_back(unit_power(logl(static_cast<long double>(p)), h1, k));
    for (const TorusFactor& factor : torus_factors(collection)) {
        std::vector<Complex> coords;
        coords.reserve(m_max + 1);
        for (std::uint32_t m = 0; m <= m_max; ++m)
            coords.push_back(unit_power(
                logl(static_cast<long double>(m) + static_cast<long double>(factor.alpha)),
                factor.h, k));
        point.omega2.push_back(std::move(coords));
    }
    return point;
}

TorusPoint rotate(const TorusPoint& point, const HurwitzCollection& collection) {
    const TorusPoint generator = trajectory_point(1, collection, point.p_max, point.m_max);
    if (generator.primes.size() != point.primes.size() ||
        generator.omega2.size() != point.omega2.size())
        throw std::invalid_argument("rotate: point bounds incompatible with collection");
    for (std::size_t g = 0; g < point.omega2.size(); ++g)
        if (generator.omega2[g].size() != point.omega2[g].size())
            throw std::invalid_argument("rotate: point bounds incompatible with collection");
    TorusPoint out = point;
    for (std::size_t i = 0; i < out.omega1.size(); ++i) out.omega1[i] *= generator.omega1[i];
    for (std::size_t g = 0; g < out.omega2.size(); ++g)
        for (std::size_t m = 0; m < out.omega2[g].size(); ++m)
            out.omega2[g][m] *= generator.omega2[g][m];
    return out;
}

double character_angle(const CharacterIndex& chi, const HurwitzCollection& collection) {
    const std::vector<TorusFactor> factors = torus_factors(collection);
    const double h1 = collection.phi_difference();
    long double theta = 0.0L;
    for (const auto& [p, e] : chi.prime_exponents)
        theta += static_cast<long double>(h1) * e * logl(static_cast<long double>(p));
    for (const auto& [key, e] : chi.factor_exponents) {
        const auto& [g, m] = key;
        if (g >= factors.size())
            throw std::invalid_argument("character_angle: factor index out of range");
        theta += static_cast<long double>(factors[g].h) * e *
                 logl(static_cast<long double>(m) +
                           static_cast<long double>(factors[g].alpha));
    }
    return static_cast<double>(theta);
}

Complex weyl_sum(const CharacterIndex& chi, std::uint64_t N, const HurwitzCollection& collection) {
    if (chi.trivial()) return Complex(1.0, 0.0);
    // theta in long double keeps k*theta reduction honest for N ~ 1e6.
    const std::vector<TorusFactor> factors = torus_factors(collection);
    const double h1 = collection.phi_difference();
    long double theta = 0.0L;
    for (const auto& [p, e] : chi.prime_exponents)
        theta += static_cast<long double>(h1) * e * logl(static_cast<long double>(p));
    for (const auto& [key, e] : chi.factor_exponents) {
        const auto& [g, m] = key;
        theta += static_cast<long double>(factors.at(g).h) * e *
                 logl(static_cast<long double>(m) +
                           static_cast<long double>(factors.at(g).alpha));
    }

    long double sum_re = 0.0L, sum_im = 0.0L;
    Complex phase(1.0, 0.0);
    Complex step(static_cast<double>(cosl(theta)), -static_cast<double>(sinl(theta)));
    for (std::uint64_t k = 0; k <= N; ++k) {
        if (k % 256 == 0) {
            const long double angle = fmodl(static_cast<long double>(k) * theta, kTwoPiL);
            phase = Complex(static_cast<double>(cosl(angle)),
                            -static_cast<double>(sinl(angle)));
        }
        sum_re += phase.real();
        sum_im += phase.imag();
        phase *= step;
    }
    const long double count = static_cast<long double>(N) + 1.0L;
    return Complex(static_cast<double>(sum_re / count), static_cast<double>(sum_im / count));
}

Complex weyl_sum_closed_form(double theta, std::uint64_t N) {
    const double half = 0.5 * theta;
    const double denom = std::sin(half);
    if (denom == 0.0) return Complex(1.0, 0.0);
    const double count = static_cast<double>(N) + 1.0;
    const double mag = std::sin(count * half) / (count * denom);
    const double ang = -static_cast<double>(N) * half;
    return Complex(mag * std::cos(ang), mag * std::sin(ang));
}

double star_discrepancy_1d(std::vector<double> angles, bool exact) {
    if (angles.empty()) throw std::invalid_argument("star_discrepancy_1d: empty sequence");
    for (double a : angles)
        if (!(a >= 0.0) || a >= 1.0)
            throw std::invalid_argument("star_discrepancy_1d: angles must lie in [0,1)");
    const double n = static_cast<double>(angles.size());
    if (exact) {
        std::sort(angles.begin(), angles.end());
        double dstar = 0.0;
        for (std::size_t i = 0; i < angles.size(); ++i) {
            const double up = static_cast<double>(i + 1) / n - angles[i];
            const double down = angles[i] - static_cast<double>(i) / n;
            dstar = std::max({dstar, up, down});
        }
        return dstar;
    }
    constexpr std::size_t kBins = 1000;
    std::vector<std::size_t> counts(kBins, 0);
    for (double a : angles) ++counts[static_cast<std::size_t>(a * kBins)];
    double dstar = 0.0, cum = 0.0;
    for (std::size_t b = 0; b < kBins; ++b) {
        const double edge_lo = static_cast<double>(b) / kBins;
        dstar = std::max(dstar, std::abs(cum / n - edge_lo));
        cum += static_cast<double>(counts[b]);
        const double edge_hi = static_cast<double>(b + 1) / kBins;
        dstar = std::max(dstar, std::abs(cum / n - edge_hi));
    }
    return dstar;
}

}  // namespace zetalab
