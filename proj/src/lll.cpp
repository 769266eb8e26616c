#include "zetalab/lll.hpp"

#include <stdexcept>

namespace zetalab {

namespace {

BigInt dot(const LatticeRow& a, const LatticeRow& b) {
    BigInt sum;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    BigInt::divrem(num, den, q, r);
    if (!r.is_zero()) throw std::logic_error("lll_reduce: inexact integral division");
    return q;
}

}  // namespace

BigInt row_norm_sq(const LatticeRow& row) { return dot(row, row); }

void lll_reduce(std::vector<LatticeRow>& basis) {
    const std::size_t n = basis.size();
    if (n <= 1) return;

    // d[i] = Gram determinant of the first i vectors; lambda[i][j] are the
    // integral Gram-Schmidt coefficients (mu_ij = lambda[i][j] / d[j+1]).
    std::vector<BigInt> d(n + 1);
    d[0] = BigInt(1);
    std::vector<std::vector<BigInt>> lambda(n, std::vector<BigInt>(n));
    std::size_t k_max = 0;  // 0-based index of the last vector with Gram data

    auto gram_step = [&](std::size_t k) {
        for (std::size_t j = 0; j <= k; ++j) {
            BigInt u = dot(basis[k], basis[j]);
            for (std::size_t i = 0; i < j; ++i)
                u = exact_div(d[i + 1] * u - lambda[k][i] * lambda[j][i], d[i]);
            if (j < k)
                lambda[k][j] = u;
            else {
                if (u.is_zero()) throw std::invalid_argument("lll_reduce: rows are dependent");
                d[k + 1] = u;
            }
        }
    };
    gram_step(0);

    auto reduce_pair = [&](std::size_t k, std::size_t l) {
        BigInt twice = lambda[k][l].abs();
        twice += twice;
        if (twice.compare(d[l + 1]) <= 0) return;
        const BigInt q = BigInt::div_round_nearest(lambda[k][l], d[l + 1]);
        for (std::size_t i = 0; i < basis[k].size(); ++i) basis[k][i] -= q * basis[l][i];
        lambda[k][l] -= q * d[l + 1];
        for (std::size_t i = 0; i < l; ++i) lambda[k][i] -= q * lambda[l][i];
    };

    auto swap_step = [&](std::size_t k) {
        std::swap(basis[k], basis[k - 1]);
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lambda[k][j], lambda[k - 1][j]);
        const BigInt lam = lambda[k][k - 1];
        const BigInt B = exact_div(d[k - 1] * d[k + 1] + lam * lam, d[k]);
        for (std::size_t i = k + 1; i <= k_max; ++i) {
            const BigInt t = lambda[i][k];
            lambda[i][k] = exact_div(d[k + 1] * lambda[i][k - 1] - lam * t, d[k]);
            lambda[i][k - 1] = exact_div(B * t + lam * lambda[i][k], d[k + 1]);
        }
        d[k] = B;
    };

    std::size_t k = 1;
    while (k < n) {
        if (k > k_max) {
            k_max = k;
            gram_step(k);
        }
        reduce_pair(k, k - 1);
        // Lovasz test with delta = 3/4:
        // swap when 4*(d[k+1]*d[k-1] + lambda^2) < 3*d[k]^2.
        const BigInt lhs = (d[k + 1] * d[k - 1] + lambda[k][k - 1] * lambda[k][k - 1]) * BigInt(4);
        const BigInt rhs = d[k] * d[k] * BigInt(3);
        if (lhs.compare(rhs) < 0) {
            swap_step(k);
            k = (k >= 2) ? k - 1 : 1;
        } else {
            for (std::size_t l = k - 1; l-- > 0;) reduce_pair(k, l);
            ++k;
        }
    }
}

}  // namespace zetalab
