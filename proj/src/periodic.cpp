#include "zetalab/periodic.hpp"

#include <cmath>
#include <stdexcept>

#include "zetalab/hurwitz.hpp"

namespace zetalab {

void PeriodicSequence::validate() const {
    const std::size_t l = coeffs.size();
    if (l == 0) throw std::invalid_argument("PeriodicSequence: empty period");
    bool any_nonzero = false;
    for (const Complex& b : coeffs)
        if (b != Complex(0.0, 0.0)) any_nonzero = true;
    if (!any_nonzero) throw std::invalid_argument("PeriodicSequence: all coefficients zero");
    for (std::size_t d = 1; d < l; ++d) {
        if (l % d != 0) continue;
        bool repeats = true;
        for (std::size_t m = 0; m < l && repeats; ++m)
            if (coeffs[m] != coeffs[m % d]) repeats = false;
        if (repeats)
            throw std::invalid_argument("PeriodicSequence: period is not minimal (divisor " +
                                        std::to_string(d) + " already repeats)");
    }
}

PeriodicSequence constant_one_sequence() { return PeriodicSequence{{Complex(1.0, 0.0)}}; }

Complex residue_b(const PeriodicSequence& seq) {
    if (seq.coeffs.empty()) throw std::invalid_argument("residue_b: empty sequence");
    Complex sum(0.0, 0.0);
    for (const Complex& b : seq.coeffs) sum += b;
    return sum / static_cast<double>(seq.coeffs.size());
}

Complex periodic_hurwitz_zeta(Complex s, double alpha, const PeriodicSequence& seq) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("periodic_hurwitz_zeta: alpha must lie in (0, 1]");
    if (seq.coeffs.empty()) throw std::invalid_argument("periodic_hurwitz_zeta: empty sequence");
    const std::size_t l = seq.coeffs.size();

    if (s == Complex(1.0, 0.0)) {
        if (residue_b(seq) != Complex(0.0, 0.0))
            throw PoleError("periodic_hurwitz_zeta: simple pole at s = 1 (residue != 0)");
        // Entire case: the pole contributions of the period decomposition
        // cancel; take the limit by summing the pole-free parts.
        Complex sum(0.0, 0.0);
        const double dl = static_cast<double>(l);
        for (std::size_t q = 0; q < l; ++q) {
            // lim_{s->1} [zeta(s,a) - 1/(s-1)] = -psi(a); use a small
            // symmetric detour instead of a digamma implementation.
            const double a = (static_cast<double>(q) + alpha) / dl;
            const double eps = 1e-6;
            const Complex left = hurwitz_zeta(Complex(1.0 - eps, 0.0), a);
            const Complex right = hurwitz_zeta(Complex(1.0 + eps, 0.0), a);
            // The pole parts -1/eps and +1/eps cancel in the average.
            sum += seq.coeffs[q] * 0.5 * (left + right);
        }
        return sum / dl;
    }

    const Complex scale = std::exp(-s * std::log(static_cast<double>(l)));
    Complex sum(0.0, 0.0);
    for (std::size_t q = 0; q < l; ++q) {
        if (seq.coeffs[q] == Complex(0.0, 0.0)) continue;
        const double a = (static_cast<double>(q) + alpha) / static_cast<double>(l);
        sum += seq.coeffs[q] * hurwitz_zeta(s, a);
    }
    return scale * sum;
}

}  // namespace zetalab
