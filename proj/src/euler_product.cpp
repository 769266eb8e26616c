#include "zetalab/euler_product.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zetalab/primes.hpp"

namespace zetalab {

void EulerProductSpec::validate() const {
    std::uint32_t prev = 0;
    for (const LocalFactor& lf : local_factors) {
        if (lf.prime <= prev)
            throw std::invalid_argument("EulerProductSpec: primes must be strictly increasing");
        if (!is_prime(lf.prime))
            throw std::invalid_argument("EulerProductSpec: index " + std::to_string(lf.prime) +
                                        " is not prime");
        prev = lf.prime;
        const double p = static_cast<double>(lf.prime);
        if (static_cast<double>(lf.terms.size()) > c1 * std::pow(p, growth_alpha))
            throw std::invalid_argument("EulerProductSpec: local degree exceeds c1*p^alpha at p=" +
                                        std::to_string(lf.prime));
        for (const LocalFactorTerm& t : lf.terms) {
            if (t.f == 0) throw std::invalid_argument("EulerProductSpec: exponent f must be >= 1");
            if (std::abs(t.a) > std::pow(p, growth_beta) * (1.0 + 1e-12))
                throw std::invalid_argument("EulerProductSpec: |a| exceeds p^beta at p=" +
                                            std::to_string(lf.prime));
        }
    }
}

std::uint32_t EulerProductSpec::max_prime() const {
    return local_factors.empty() ? 0 : local_factors.back().prime;
}

const LocalFactor* EulerProductSpec::factor_for(std::uint32_t p) const {
    auto it = std::lower_bound(local_factors.begin(), local_factors.end(), p,
                               [](const LocalFactor& lf, std::uint32_t q) { return lf.prime < q; });
    if (it == local_factors.end() || it->prime != p) return nullptr;
    return &*it;
}

EulerProductSpec riemann_spec(std::uint32_t max_prime) {
    EulerProductSpec spec;
    spec.label = "riemann";
    for (std::uint32_t p : primes_up_to(max_prime))
        spec.local_factors.push_back({p, {{Complex(1.0, 0.0), 1}}});
    return spec;
}

EulerProductSpec zeta_squared_spec(std::uint32_t max_prime) {
    EulerProductSpec spec;
    spec.label = "zeta_squared";
    spec.c1 = 2.0;  // degree-2 local factors
    for (std::uint32_t p : primes_up_to(max_prime))
        spec.local_factors.push_back({p, {{Complex(1.0, 0.0), 1}, {Complex(1.0, 0.0), 1}}});
    return spec;
}

EulerProductSpec unit_spec(std::uint32_t max_prime) {
    EulerProductSpec spec;
    spec.label = "one";
    for (std::uint32_t p : primes_up_to(max_prime))
        spec.local_factors.push_back({p, {{Complex(0.0, 0.0), 1}}});
    return spec;
}

double sigma_star_for(const EulerProductSpec& spec) {
    if (spec.label == "riemann") return 0.5;
    if (spec.label == "zeta_squared" || spec.label == "one") return -1.0;
    return -1.0;
}

namespace {

// Power-series expansion of one local factor in x = p^{-s}, up to x^order.
std::vector<Complex> local_series(const LocalFactor& lf, std::size_t order) {
    std::vector<Complex> series(order + 1, Complex(0.0, 0.0));
    series[0] = Complex(1.0, 0.0);
    for (const LocalFactorTerm& term : lf.terms) {
        if (term.a == Complex(0.0, 0.0)) continue;
        // Multiply by (1 - a x^f)^{-1} = sum_{n>=0} a^n x^{nf}.
        std::vector<Complex> next(order + 1, Complex(0.0, 0.0));
        for (std::size_t base = 0; base <= order; ++base) {
            if (series[base] == Complex(0.0, 0.0)) continue;
            Complex a_pow(1.0, 0.0);
            for (std::size_t n = 0; base + n * term.f <= order; ++n) {
                next[base + n * term.f] += series[base] * a_pow;
                a_pow *= term.a;
            }
        }
        series = std::move(next);
    }
    return series;
}

}  // namespace

DirichletCoefficients dirichlet_coefficients(const EulerProductSpec& spec, std::size_t K) {
    if (K == 0) throw std::invalid_argument("dirichlet_coefficients: K must be positive");
    std::vector<Complex> raw(K + 1, Complex(0.0, 0.0));  // expansion of the unshifted product
    raw[1] = Complex(1.0, 0.0);
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(K))) {
        const LocalFactor* lf = spec.factor_for(p);
        if (lf == nullptr)
            throw ConvergenceError("dirichlet_coefficients: spec lacks the local factor at prime " +
                                   std::to_string(p));
        std::size_t order = 0;
        std::uint64_t pw = 1;
        while (pw <= K / p) {
            pw *= p;
            ++order;
        }
        const std::vector<Complex> series = local_series(*lf, order);
        // Multiplicative convolution: fold prime powers into the table.
        // Only k <= K/p can spawn multiples, and only p-coprime k carry
        // pre-fold values, so the pass costs O(K/p).
        for (std::size_t k = K / p; k >= 1; --k) {
            if (raw[k] == Complex(0.0, 0.0)) continue;
            if (k % p == 0) continue;  // built from smaller primes only
            std::uint64_t q = 1;
            for (std::size_t e = 1; e <= order; ++e) {
                q *= p;
                const std::uint64_t idx = k * q;
                if (idx > K) break;
                if (series[e] != Complex(0.0, 0.0)) raw[idx] += raw[k] * series[e];
            }
        }
    }
    const double shift = spec.growth_alpha + spec.growth_beta;
    DirichletCoefficients coeffs;
    coeffs.values.resize(K);
    for (std::size_t k = 1; k <= K; ++k)
        coeffs.values[k - 1] =
            (shift == 0.0) ? raw[k] : raw[k] * std::pow(static_cast<double>(k), -shift);
    return coeffs;
}

Complex matsumoto_eval(const EulerProductSpec& spec, Complex s, const MatsumotoMode& mode) {
    if (s.real() <= 1.0)
        throw ConvergenceError("matsumoto_eval: requires sigma > 1 (absolute convergence)");
    const double shift = spec.growth_alpha + spec.growth_beta;
    if (std::holds_alternative<EulerProductMode>(mode)) {
        const std::uint32_t P = std::get<EulerProductMode>(mode).max_prime;
        const Complex w = s + shift;  // phi(s) = phi~(s + alpha + beta)
        Complex product(1.0, 0.0);
        for (std::uint32_t p : primes_up_to(P)) {
            const LocalFactor* lf = spec.factor_for(p);
            if (lf == nullptr)
                throw ConvergenceError("matsumoto_eval: spec lacks the local factor at prime " +
                                       std::to_string(p));
            const double logp = std::log(static_cast<double>(p));
            for (const LocalFactorTerm& term : lf->terms) {
                if (term.a == Complex(0.0, 0.0)) continue;
                const Complex x = std::exp(-w * (logp * static_cast<double>(term.f)));
                product /= (Complex(1.0, 0.0) - term.a * x);
            }
        }
        return product;
    }
    const std::size_t K = std::get<DirichletSumMode>(mode).truncation;
    const DirichletCoefficients coeffs = dirichlet_coefficients(spec, K);
    const double sigma = s.real(), t = s.imag();
    double sum_re = 0.0, sum_im = 0.0;
    for (std::size_t k = K; k >= 1; --k) {  // ascending magnitudes
        const Complex c = coeffs.values[k - 1];
        if (c == Complex(0.0, 0.0)) continue;
        const double L = std::log(static_cast<double>(k));
        const double r = std::exp(-sigma * L);
        sum_re += c.real() * r * std::cos(t * L) + c.imag() * r * std::sin(t * L);
        sum_im += c.imag() * r * std::cos(t * L) - c.real() * r * std::sin(t * L);
    }
    return Complex(sum_re, sum_im);
}

double steuding_kappa(const DirichletCoefficients& coeffs, const EulerProductSpec& spec,
                      double x) {
    if (x < 2.0) throw std::invalid_argument("steuding_kappa: x must be >= 2");
    if (static_cast<double>(coeffs.truncation()) < x)
        throw std::invalid_argument("steuding_kappa: coefficient table shorter than x");
    (void)spec;
    const auto primes = primes_up_to(static_cast<std::uint32_t>(x));
    double sum = 0.0;
    for (std::uint32_t p : primes) sum += std::norm(coeffs.at(p));
    return sum / static_cast<double>(primes.size());
}

}  // namespace zetalab
