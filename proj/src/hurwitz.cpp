#include "zetalab/hurwitz.hpp"

#include <cmath>
#include <stdexcept>

#include "zetalab/bernoulli.hpp"

namespace zetalab {

namespace detail {

Complex hurwitz_zeta_em(Complex s, double a, long cut, int max_pairs) {
    const double sigma = s.real();
    const double t = s.imag();

    // Partial sum over m < cut with compensated accumulation.  The power
    // (m+a)^{-s} uses the principal real logarithm of the positive base.
    double sum_re = 0.0, sum_im = 0.0, c_re = 0.0, c_im = 0.0;
    for (long m = 0; m < cut; ++m) {
        const double L = std::log(static_cast<double>(m) + a);
        const double r = std::exp(-sigma * L);
        const double ang = -t * L;
        const double term_re = r * std::cos(ang);
        const double term_im = r * std::sin(ang);
        double y = term_re - c_re;
        double v = sum_re + y;
        c_re = (v - sum_re) - y;
        sum_re = v;
        y = term_im - c_im;
        v = sum_im + y;
        c_im = (v - sum_im) - y;
        sum_im = v;
    }
    Complex result(sum_re, sum_im);

    const double base = static_cast<double>(cut) + a;
    const Complex u = std::exp(-s * std::log(base));  // (M+a)^{-s}

    // Integral tail and half end-point.
    result += u * base / (s - 1.0);
    result += 0.5 * u;

    // Bernoulli corrections: B_{2k}/(2k)! * (s)_{2k-1} * (M+a)^{-s-2k+1}.
    Complex poch = s;                 // rising factorial s(s+1)...(s+2k-2)
    Complex power = u / base;         // (M+a)^{-s-1}
    const double inv_b2 = 1.0 / (base * base);
    double prev_mag = 0.0;
    for (int k = 1; k <= max_pairs; ++k) {
        const Complex term = bernoulli_over_factorial(static_cast<std::size_t>(k)) * poch * power;
        result += term;
        const double mag = std::abs(term);
        if (mag < 1e-14 * (1.0 + std::abs(result))) break;
        if (k > 3 && prev_mag > 0.0 && mag > prev_mag) break;  // asymptotic series turned
        prev_mag = mag;
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        power *= inv_b2;
    }
    return result;
}

}  // namespace detail

Complex hurwitz_zeta(Complex s, double a) {
    if (!(a > 0.0) || a > 1.0)
        throw std::invalid_argument("hurwitz_zeta: parameter a must lie in (0, 1]");
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw std::invalid_argument("hurwitz_zeta: s must be finite");
    if (s == Complex(1.0, 0.0))
        throw PoleError("hurwitz_zeta: simple pole at s = 1");

    const long cut = std::max<long>(static_cast<long>(std::ceil(std::abs(s.imag()))) + 10, 20);
    return detail::hurwitz_zeta_em(s, a, cut, 30);
}

}  // namespace zetalab
