// Incremental evaluation of Dirichlet-type sums along arithmetic shift
// progressions s -> s + ik*delta.  The k-dependence of every term is a unit
// rotation, so a scan over k = 0..N costs one complex multiply per term per
// step instead of a fresh power.  Phases are re-initialized from
// range-reduced long-double angles at every block boundary (k = 0 mod 256),
// which caps multiplicative drift and makes per-k values independent of how
// a scan is split across workers.
#pragma once

#include <cstdint>
#include <vector>

#include "zetalab/types.hpp"

namespace zetalab {

inline constexpr std::size_t kProgressionBlock = 256;

// Finite weighted sum F(k) = sum_m w_m * exp(-i*(k*delta)*L_m).
class DirichletProgression {
  public:
    DirichletProgression(std::vector<double> logs, std::vector<Complex> weights, double delta);

    // Value at shift index k; k must be nondecreasing across calls.
    Complex value_at(std::size_t k);

  private:
    void reinit_block(std::size_t k0);

    std::vector<double> logs_;
    std::vector<Complex> weights_;
    std::vector<Complex> phase_, step_;
    double delta_;
    std::size_t block_start_ = 0;
    std::size_t cursor_ = 0;
    bool primed_ = false;
};

// Euler-Maclaurin continuation of sum_{m>=0} (stride*m + offset)^{-s}
// evaluated at s = s_g + ik*delta for a fixed set of points s_g.  Covers the
// Hurwitz zeta (stride 1, offset a) and each residue class of a periodic
// Hurwitz zeta (stride l, offset q + alpha).
class ArithmeticZetaProgression {
  public:
    struct Options {
        double cut_factor = 0.25;  // cut M ~ cut_factor * (|t|_max + 30) terms
        int min_cut = 48;
        int max_pairs = 18;        // Bernoulli correction pairs
    };

    ArithmeticZetaProgression(double stride, double offset, std::vector<Complex> points,
                              double delta);
    ArithmeticZetaProgression(double stride, double offset, std::vector<Complex> points,
                              double delta, Options options);

    // Values F(s_g + ik*delta) for all points g at shift index k; k must be
    // nondecreasing across calls.  out must hold points().size() entries.
    void values_at(std::size_t k, Complex* out);

    std::size_t point_count() const { return points_.size(); }

  private:
    void ensure_block(std::size_t k);
    void grow_cut(std::size_t new_cut);
    void reinit_phases(std::size_t k0);

    double stride_, offset_, delta_;
    std::vector<Complex> points_;
    Options options_;

    std::size_t cut_ = 0;                    // number of explicit terms
    std::vector<double> logs_;               // log(stride*m + offset)
    std::vector<long double> logs_l_;
    std::vector<double> phase_re_, phase_im_;
    std::vector<double> step_re_, step_im_;
    // Static per-point term weights, laid out per point for contiguous dots.
    std::vector<std::vector<double>> w_re_, w_im_;

    double boundary_log_ = 0.0;              // log(stride*cut + offset)
    Complex boundary_phase_{1.0, 0.0}, boundary_step_{1.0, 0.0};
    std::vector<Complex> boundary_weight_;   // (stride*cut+offset)^{-s_g}

    std::size_t block_start_ = 0;
    std::size_t cursor_ = 0;
    bool primed_ = false;
    double max_abs_t0_ = 0.0;
};

}  // namespace zetalab
