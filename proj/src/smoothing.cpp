#include "zetalab/smoothing.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "zetalab/primes.hpp"

namespace zetalab {

void SmoothingParams::validate() const {
    if (n < 1) throw std::invalid_argument("SmoothingParams: n must be >= 1");
    if (!(sigma0_star > 0.5))
        throw std::invalid_argument("SmoothingParams: sigma0_star must exceed 1/2");
}

double weight_v1(std::uint64_t m, const SmoothingParams& params) {
    if (m < 1) throw std::invalid_argument("weight_v1: m must be >= 1");
    const double ratio = static_cast<double>(m) / static_cast<double>(params.n);
    return std::exp(-std::pow(ratio, params.sigma0_star));
}

double weight_v2(std::uint64_t m, double alpha_j, const SmoothingParams& params) {
    if (!(alpha_j > 0.0) || alpha_j > 1.0)
        throw std::invalid_argument("weight_v2: alpha must lie in (0, 1]");
    const double ratio = (static_cast<double>(m) + alpha_j) /
                         (static_cast<double>(params.n) + alpha_j);
    return std::exp(-std::pow(ratio, params.sigma0_star));
}

std::size_t required_truncation(const SmoothingParams& params, double tol) {
    params.validate();
    if (!(tol > 0.0) || tol >= 1.0) throw std::invalid_argument("required_truncation: bad tol");
    const double ratio = std::pow(std::log(1.0 / tol), 1.0 / params.sigma0_star);
    return static_cast<std::size_t>(2.0 * ratio * static_cast<double>(params.n)) + 64;
}

Complex TorusPoint::omega1_at_prime(std::uint32_t p) const {
    auto it = std::lower_bound(primes.begin(), primes.end(), p);
    if (it == primes.end() || *it != p)
        throw std::invalid_argument("TorusPoint: prime " + std::to_string(p) + " not stored");
    return omega1[static_cast<std::size_t>(it - primes.begin())];
}

Complex TorusPoint::omega1_extended(std::uint64_t m) const {
    if (m == 0) throw std::invalid_argument("TorusPoint: omega1 argument must be >= 1");
    Complex value(1.0, 0.0);
    std::uint64_t rest = m;
    for (std::size_t i = 0; i < primes.size() && rest > 1; ++i) {
        const std::uint64_t p = primes[i];
        if (p * p > rest) break;
        while (rest % p == 0) {
            value *= omega1[i];
            rest /= p;
        }
    }
    if (rest > 1) {
        if (rest > p_max)
            throw std::invalid_argument("TorusPoint: factor " + std::to_string(rest) +
                                        " exceeds stored prime bound");
        value *= omega1_at_prime(static_cast<std::uint32_t>(rest));
    }
    return value;
}

std::vector<Complex> TorusPoint::omega1_table(std::size_t limit) const {
    const auto spf = smallest_prime_factor_table(static_cast<std::uint32_t>(limit));
    std::vector<Complex> table(limit + 1, Complex(1.0, 0.0));
    for (std::size_t m = 2; m <= limit; ++m) {
        const std::uint32_t p = spf[m];
        table[m] = table[m / p] * omega1_at_prime(p);
    }
    return table;
}

TorusPoint TorusPoint::all_ones() const {
    TorusPoint ones = *this;
    for (Complex& w : ones.omega1) w = Complex(1.0, 0.0);
    for (auto& group : ones.omega2)
        for (Complex& w : group) w = Complex(1.0, 0.0);
    return ones;
}

namespace {
// 53 uniform bits -> angle in [0, 2*pi); implementation-independent mapping.
double uniform_angle(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return kTwoPi * u;
}
}  // namespace

TorusPoint sample_omega(std::uint64_t seed, std::uint32_t p_max, std::uint32_t m_max,
                        std::size_t groups) {
    if (p_max < 1 || m_max < 1 || groups < 1)
        throw std::invalid_argument("sample_omega: bounds must be >= 1");
    TorusPoint point;
    point.p_max = p_max;
    point.m_max = m_max;
    point.primes = primes_up_to(p_max);
    std::mt19937_64 rng(seed);
    point.omega1.reserve(point.primes.size());
    for (std::size_t i = 0; i < point.primes.size(); ++i) {
        const double a = uniform_angle(rng);
        point.omega1.push_back(Complex(std::cos(a), std::sin(a)));
    }
    point.omega2.resize(groups);
    for (std::size_t j = 0; j < groups; ++j) {
        point.omega2[j].reserve(m_max + 1);
        for (std::uint32_t m = 0; m <= m_max; ++m) {
            const double a = uniform_angle(rng);
            point.omega2[j].push_back(Complex(std::cos(a), std::sin(a)));
        }
    }
    return point;
}

Complex phi_n(Complex s, const DirichletCoefficients& coeffs, const SmoothingParams& params,
              const TorusPoint* omega, std::size_t K) {
    params.validate();
    if (!(s.real() > 0.5)) throw std::invalid_argument("phi_n: requires sigma > 1/2");
    const std::size_t K_req = required_truncation(params);
    if (K == 0) K = K_req;
    if (K < K_req)
        throw std::invalid_argument("phi_n: truncation " + std::to_string(K) +
                                    " below required " + std::to_string(K_req));
    if (coeffs.truncation() < K)
        throw ConvergenceError("phi_n: coefficient table shorter than required truncation " +
                               std::to_string(K));

    std::vector<Complex> twist;
    if (omega != nullptr) twist = omega->omega1_table(K);

    const double sigma = s.real(), t = s.imag();
    double sum_re = 0.0, sum_im = 0.0;
    for (std::size_t m = 1; m <= K; ++m) {
        Complex c = coeffs.values[m - 1];
        if (c == Complex(0.0, 0.0)) continue;
        if (omega != nullptr) c *= twist[m];
        const double v = weight_v1(m, params);
        const double L = std::log(static_cast<double>(m));
        const double r = v * std::exp(-sigma * L);
        const double cs = std::cos(t * L), sn = std::sin(t * L);
        sum_re += r * (c.real() * cs + c.imag() * sn);
        sum_im += r * (c.imag() * cs - c.real() * sn);
    }
    return Complex(sum_re, sum_im);
}

Complex zeta_n(Complex s, double alpha, const PeriodicSequence& seq, const SmoothingParams& params,
               const TorusPoint* omega, std::size_t group, std::size_t M) {
    params.validate();
    if (!(s.real() > 0.5)) throw std::invalid_argument("zeta_n: requires sigma > 1/2");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("zeta_n: alpha must lie in (0, 1]");
    const std::size_t M_req = required_truncation(params);
    if (M == 0) M = M_req;
    if (M < M_req)
        throw std::invalid_argument("zeta_n: truncation below required " + std::to_string(M_req));
    if (omega != nullptr) {
        if (group >= omega->groups())
            throw std::invalid_argument("zeta_n: torus group index out of range");
        if (omega->omega2[group].size() < M + 1)
            throw ConvergenceError("zeta_n: torus coordinates shorter than truncation");
    }

    const double sigma = s.real(), t = s.imag();
    double sum_re = 0.0, sum_im = 0.0;
    for (std::size_t m = 0; m <= M; ++m) {
        Complex b = seq.at(m);
        if (b == Complex(0.0, 0.0)) continue;
        if (omega != nullptr) b *= omega->omega2[group][m];
        const double v = weight_v2(m, alpha, params);
        const double L = std::log(static_cast<double>(m) + alpha);
        const double r = v * std::exp(-sigma * L);
        const double cs = std::cos(t * L), sn = std::sin(t * L);
        sum_re += r * (b.real() * cs + b.imag() * sn);
        sum_im += r * (b.imag() * cs - b.real() * sn);
    }
    return Complex(sum_re, sum_im);
}

}  // namespace zetalab
