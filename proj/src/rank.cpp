#include "zetalab/rank.hpp"

#include <algorithm>
#include <cmath>

namespace zetalab {

namespace {

// One-sided Jacobi: orthogonalize column pairs by phased Givens rotations
// applied from the right.  Works on A itself, so tiny singular values are
// resolved at machine precision (a Gram-matrix route would bury them in
// sqrt(eps) noise).
void orthogonalize_columns(std::vector<Complex>& a, std::size_t rows, std::size_t cols) {
    auto col = [&](std::size_t r, std::size_t c) -> Complex& { return a[r * cols + c]; };
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                double app = 0.0, aqq = 0.0;
                Complex apq(0.0, 0.0);
                for (std::size_t r = 0; r < rows; ++r) {
                    app += std::norm(col(r, p));
                    aqq += std::norm(col(r, q));
                    apq += std::conj(col(r, p)) * col(r, q);
                }
                const double mag = std::abs(apq);
                if (mag <= 1e-30 || mag * mag <= 1e-60 * app * aqq) continue;
                if (mag <= 1e-15 * std::sqrt(app * aqq)) continue;
                rotated = true;
                const Complex phase = apq / mag;
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t r = 0; r < rows; ++r) {
                    const Complex vp = col(r, p), vq = col(r, q);
                    col(r, p) = c * vp - s * std::conj(phase) * vq;
                    col(r, q) = s * vp + c * std::conj(phase) * vq;
                }
            }
        }
        if (!rotated) break;
    }
}

}  // namespace

std::vector<double> singular_values(const CoefficientMatrix& matrix) {
    std::vector<Complex> work = matrix.entries;
    orthogonalize_columns(work, matrix.rows, matrix.cols);
    std::vector<double> sv(matrix.cols, 0.0);
    for (std::size_t c = 0; c < matrix.cols; ++c) {
        double norm_sq = 0.0;
        for (std::size_t r = 0; r < matrix.rows; ++r)
            norm_sq += std::norm(work[r * matrix.cols + c]);
        sv[c] = std::sqrt(norm_sq);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

std::size_t rank_check(const CoefficientMatrix& matrix, double tol) {
    if (matrix.rows == 0 || matrix.cols == 0) return 0;
    const std::vector<double> sv = singular_values(matrix);
    if (sv.empty() || sv.front() == 0.0) return 0;
    if (tol <= 0.0) tol = 1e-10 * sv.front();
    std::size_t rank = 0;
    for (double s : sv)
        if (s > tol) ++rank;
    return rank;
}

}  // namespace zetalab
