#include "zetalab/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "zetalab/primes.hpp"
#include "zetalab/shifted_series.hpp"
#include "zetalab/torus.hpp"

namespace zetalab {

namespace {

struct SampleStats {
    Complex mean{0.0, 0.0};
    double second = 0.0;         // E |X|^2
    double abs_mean = 0.0;       // E |X|
    double var_component = 0.0;  // E |X - mean|^2
    double var_second = 0.0;     // Var(|X|^2)
    std::size_t count = 0;
};

SampleStats stats_of(const std::vector<Complex>& sample) {
    SampleStats s;
    s.count = sample.size();
    Complex sum(0.0, 0.0);
    double sum_sq = 0.0, sum_abs = 0.0, sum_quad = 0.0;
    for (const Complex& x : sample) {
        sum += x;
        const double n2 = std::norm(x);
        sum_sq += n2;
        sum_abs += std::abs(x);
        sum_quad += n2 * n2;
    }
    const double n = static_cast<double>(s.count);
    s.mean = sum / n;
    s.second = sum_sq / n;
    s.abs_mean = sum_abs / n;
    s.var_component = std::max(0.0, s.second - std::norm(s.mean));
    s.var_second = std::max(0.0, sum_quad / n - s.second * s.second);
    return s;
}

MomentComponent gate(const std::string& label, const std::vector<Complex>& shift_sample,
                     const std::vector<Complex>& mc_sample, double tol_factor) {
    const SampleStats a = stats_of(shift_sample);
    const SampleStats b = stats_of(mc_sample);
    MomentComponent c;
    c.label = label;
    c.mean_shift = a.mean;
    c.mean_mc = b.mean;
    c.second_moment_shift = a.second;
    c.second_moment_mc = b.second;
    c.abs_mean_shift = a.abs_mean;
    c.abs_mean_mc = b.abs_mean;
    c.se_mean = std::sqrt(a.var_component / static_cast<double>(a.count) +
                          b.var_component / static_cast<double>(b.count));
    c.se_second = std::sqrt(a.var_second / static_cast<double>(a.count) +
                            b.var_second / static_cast<double>(b.count));
    c.mean_ok = std::abs(a.mean - b.mean) <= tol_factor * (c.se_mean + 1e-15);
    c.second_ok = std::abs(a.second - b.second) <= tol_factor * (c.se_second + 1e-15);
    return c;
}

// One Hurwitz-side functional: the term list of zeta_n at sigma.
struct HurwitzTerms {
    std::string label;
    std::size_t group = 0;  // torus factor index (omega2 group)
    double h = 1.0;
    std::vector<std::uint32_t> indices;  // m values with nonzero coefficient
    std::vector<double> logs;
    std::vector<Complex> weights;
};

}  // namespace

MomentReport compare_distributions(const HurwitzCollection& collection,
                                   const EulerProductSpec& spec, const CompareOptions& options) {
    collection.validate();
    if (options.shift_count < 10 || options.mc_count < 10)
        throw std::invalid_argument("compare_distributions: sample counts must be >= 10");
    const SmoothingParams params{options.n_smooth, options.sigma0_star};
    params.validate();
    const std::size_t K = required_truncation(params);
    const DirichletCoefficients coeffs = dirichlet_coefficients(spec, K);
    const std::vector<TorusFactor> factors = torus_factors(collection);
    const double sigma = options.sigma;

    MomentReport report;
    report.sample_count_shift = options.shift_count;
    report.sample_count_mc = options.mc_count;
    report.sigma = sigma;
    report.n_smooth = options.n_smooth;
    report.seed = options.seed;
    report.tolerance_factor = options.tolerance_factor;

    // phi term list: c_m v1(m) m^{-sigma} at the nonzero coefficients.
    std::vector<std::uint32_t> phi_indices;
    std::vector<double> phi_logs;
    std::vector<Complex> phi_weights;
    for (std::size_t m = 1; m <= K; ++m) {
        const Complex c = coeffs.values[m - 1];
        if (c == Complex(0.0, 0.0)) continue;
        const double L = std::log(static_cast<double>(m));
        phi_indices.push_back(static_cast<std::uint32_t>(m));
        phi_logs.push_back(L);
        phi_weights.push_back(c * weight_v1(m, params) * std::exp(-sigma * L));
    }

    // Hurwitz term lists, one per (factor, sequence) component.
    std::vector<HurwitzTerms> hurwitz;
    for (std::size_t g = 0; g < factors.size(); ++g) {
        const TorusFactor& factor = factors[g];
        const HurwitzFamily& family = collection.families[factor.family];
        const bool per_seq = collection.differences.mode == DifferenceMode::per_sequence;
        const std::size_t l_begin = per_seq ? factor.sequence : 0;
        const std::size_t l_end = per_seq ? factor.sequence + 1 : family.sequences.size();
        for (std::size_t l = l_begin; l < l_end; ++l) {
            const PeriodicSequence& seq = family.sequences[l];
            HurwitzTerms terms;
            terms.label = "zeta_n_f" + std::to_string(factor.family + 1) + "_s" +
                          std::to_string(l + 1);
            terms.group = g;
            terms.h = factor.h;
            for (std::size_t m = 0; m <= K; ++m) {
                const Complex b = seq.at(m);
                if (b == Complex(0.0, 0.0)) continue;
                const double L = std::log(static_cast<double>(m) + factor.alpha);
                terms.indices.push_back(static_cast<std::uint32_t>(m));
                terms.logs.push_back(L);
                terms.weights.push_back(b * weight_v2(m, factor.alpha, params) *
                                        std::exp(-sigma * L));
            }
            hurwitz.push_back(std::move(terms));
        }
    }

    // Shift samples via phase progressions.
    std::vector<Complex> phi_shift(options.shift_count);
    {
        DirichletProgression prog(phi_logs, phi_weights, collection.phi_difference());
        for (std::size_t k = 0; k < options.shift_count; ++k) phi_shift[k] = prog.value_at(k);
    }
    std::vector<std::vector<Complex>> hurwitz_shift(hurwitz.size());
    for (std::size_t c = 0; c < hurwitz.size(); ++c) {
        hurwitz_shift[c].resize(options.shift_count);
        DirichletProgression prog(hurwitz[c].logs, hurwitz[c].weights, hurwitz[c].h);
        for (std::size_t k = 0; k < options.shift_count; ++k)
            hurwitz_shift[c][k] = prog.value_at(k);
    }

    // Monte Carlo samples: one Haar point per index, used by all components.
    const auto spf = smallest_prime_factor_table(static_cast<std::uint32_t>(K));
    std::vector<Complex> phi_mc(options.mc_count);
    std::vector<std::vector<Complex>> hurwitz_mc(hurwitz.size(),
                                                 std::vector<Complex>(options.mc_count));
    std::vector<Complex> ext(K + 1, Complex(1.0, 0.0));
    std::vector<std::size_t> prime_slot(K + 1, 0);
    {
        const auto primes = primes_up_to(static_cast<std::uint32_t>(K));
        for (std::size_t i = 0; i < primes.size(); ++i) prime_slot[primes[i]] = i;
    }
    for (std::size_t i = 0; i < options.mc_count; ++i) {
        const TorusPoint omega = sample_omega(options.seed + i, static_cast<std::uint32_t>(K),
                                              static_cast<std::uint32_t>(K), factors.size());
        for (std::size_t m = 2; m <= K; ++m)
            ext[m] = ext[m / spf[m]] * omega.omega1[prime_slot[spf[m]]];
        Complex sum(0.0, 0.0);
        for (std::size_t idx = 0; idx < phi_indices.size(); ++idx)
            sum += phi_weights[idx] * ext[phi_indices[idx]];
        phi_mc[i] = sum;
        for (std::size_t c = 0; c < hurwitz.size(); ++c) {
            const HurwitzTerms& terms = hurwitz[c];
            Complex hsum(0.0, 0.0);
            for (std::size_t idx = 0; idx < terms.indices.size(); ++idx)
                hsum += terms.weights[idx] * omega.omega2[terms.group][terms.indices[idx]];
            hurwitz_mc[c][i] = hsum;
        }
    }

    report.components.push_back(
        gate("phi_n", phi_shift, phi_mc, options.tolerance_factor));
    for (std::size_t c = 0; c < hurwitz.size(); ++c)
        report.components.push_back(
            gate(hurwitz[c].label, hurwitz_shift[c], hurwitz_mc[c], options.tolerance_factor));

    report.all_ok = true;
    for (const MomentComponent& c : report.components)
        report.all_ok = report.all_ok && c.mean_ok && c.second_ok;
    if (options.keep_samples) {
        report.shift_samples.push_back(std::move(phi_shift));
        report.mc_samples.push_back(std::move(phi_mc));
        for (std::size_t c = 0; c < hurwitz.size(); ++c) {
            report.shift_samples.push_back(std::move(hurwitz_shift[c]));
            report.mc_samples.push_back(std::move(hurwitz_mc[c]));
        }
    }
    return report;
}

}  // namespace zetalab
