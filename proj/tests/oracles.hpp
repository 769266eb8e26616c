// Independent reference implementations used only by tests.  Each oracle
// takes the brute-force route (direct summation, elimination, enumeration)
// so it shares no code path with the library evaluators it checks.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracles {

using Complex = std::complex<double>;

// Direct summation of 1e6 terms of sum (m+a)^{-s} plus the integral tail
// with endpoint and first-derivative correction; own error well below 1e-10
// for sigma >= 0.6, |t| <= 50.
inline Complex hurwitz_direct(Complex s, double a, long terms = 1000000) {
    long double sum_re = 0.0L, sum_im = 0.0L;
    const double sigma = s.real(), t = s.imag();
    for (long m = 0; m < terms; ++m) {
        const double L = std::log(static_cast<double>(m) + a);
        const double r = std::exp(-sigma * L);
        sum_re += static_cast<long double>(r * std::cos(t * L));
        sum_im += static_cast<long double>(-r * std::sin(t * L));
    }
    const double base = static_cast<double>(terms) + a;
    const Complex u = std::exp(-s * std::log(base));
    Complex tail = u * base / (s - 1.0) + 0.5 * u + s * u / base / 12.0;
    return Complex(static_cast<double>(sum_re), static_cast<double>(sum_im)) + tail;
}

// Direct weighted summation of a periodic-coefficient Hurwitz series; for
// mean-zero periods the partial sums converge absolutely enough at
// sigma >= 1 that 1e6 terms reach ~1e-12.
inline Complex periodic_direct(Complex s, double alpha, const std::vector<Complex>& period,
                               long terms = 1000000) {
    long double sum_re = 0.0L, sum_im = 0.0L;
    const double sigma = s.real(), t = s.imag();
    for (long m = 0; m < terms; ++m) {
        const Complex b = period[static_cast<std::size_t>(m) % period.size()];
        if (b == Complex(0.0, 0.0)) continue;
        const double L = std::log(static_cast<double>(m) + alpha);
        const double r = std::exp(-sigma * L);
        const Complex term = b * Complex(r * std::cos(t * L), -r * std::sin(t * L));
        sum_re += static_cast<long double>(term.real());
        sum_im += static_cast<long double>(term.imag());
    }
    return Complex(static_cast<double>(sum_re), static_cast<double>(sum_im));
}

// Exact rank of an integer matrix by fraction-free Gaussian elimination
// (Bareiss); entries must stay within int64 range for the tested sizes.
inline std::size_t integer_rank(std::vector<std::vector<long long>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    long long prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace oracles
