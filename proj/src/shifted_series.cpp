#include "zetalab/shifted_series.hpp"

#include <cmath>
#include <stdexcept>

#include "zetalab/bernoulli.hpp"

namespace zetalab {

namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

// exp(-i * (k*delta*L)) with the angle reduced in long double.
inline Complex reduced_phase(std::size_t k, double delta, long double log_l) {
    const long double angle = fmodl(static_cast<long double>(k) *
                                             static_cast<long double>(delta) * log_l,
                                         kTwoPiL);
    return Complex(static_cast<double>(cosl(angle)), -static_cast<double>(sinl(angle)));
}

}  // namespace

DirichletProgression::DirichletProgression(std::vector<double> logs, std::vector<Complex> weights,
                                           double delta)
    : logs_(std::move(logs)), weights_(std::move(weights)), delta_(delta) {
    if (logs_.size() != weights_.size())
        throw std::invalid_argument("DirichletProgression: size mismatch");
    const std::size_t n = logs_.size();
    phase_.resize(n);
    step_.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double a = delta_ * logs_[m];
        step_[m] = Complex(std::cos(a), -std::sin(a));
    }
}

void DirichletProgression::reinit_block(std::size_t k0) {
    for (std::size_t m = 0; m < logs_.size(); ++m)
        phase_[m] = reduced_phase(k0, delta_, static_cast<long double>(logs_[m]));
    block_start_ = k0;
    cursor_ = k0;
    primed_ = true;
}

Complex DirichletProgression::value_at(std::size_t k) {
    const std::size_t k_block = (k / kProgressionBlock) * kProgressionBlock;
    if (!primed_ || k < cursor_ || k_block != block_start_) reinit_block(k_block);
    while (cursor_ < k) {
        for (std::size_t m = 0; m < phase_.size(); ++m) phase_[m] *= step_[m];
        ++cursor_;
    }
    double re = 0.0, im = 0.0;
    for (std::size_t m = 0; m < phase_.size(); ++m) {
        const Complex w = weights_[m];
        const Complex p = phase_[m];
        re += w.real() * p.real() - w.imag() * p.imag();
        im += w.real() * p.imag() + w.imag() * p.real();
    }
    return Complex(re, im);
}

ArithmeticZetaProgression::ArithmeticZetaProgression(double stride, double offset,
                                                     std::vector<Complex> points, double delta)
    : ArithmeticZetaProgression(stride, offset, std::move(points), delta, Options{}) {}

ArithmeticZetaProgression::ArithmeticZetaProgression(double stride, double offset,
                                                     std::vector<Complex> points, double delta,
                                                     Options options)
    : stride_(stride), offset_(offset), delta_(delta), points_(std::move(points)),
      options_(options) {
    if (!(stride_ > 0.0) || !(offset_ > 0.0))
        throw std::invalid_argument("ArithmeticZetaProgression: bad progression");
    if (!(delta_ > 0.0)) throw std::invalid_argument("ArithmeticZetaProgression: delta must be > 0");
    if (points_.empty()) throw std::invalid_argument("ArithmeticZetaProgression: no points");
    w_re_.resize(points_.size());
    w_im_.resize(points_.size());
    boundary_weight_.resize(points_.size());
    for (const Complex& s : points_) max_abs_t0_ = std::max(max_abs_t0_, std::abs(s.imag()));
}

void ArithmeticZetaProgression::grow_cut(std::size_t new_cut) {
    if (new_cut <= cut_) return;
    logs_.reserve(new_cut);
    logs_l_.reserve(new_cut);
    for (std::size_t m = cut_; m < new_cut; ++m) {
        const long double base = static_cast<long double>(stride_) * m +
                                 static_cast<long double>(offset_);
        const long double L = logl(base);
        logs_l_.push_back(L);
        logs_.push_back(static_cast<double>(L));
        const double a = delta_ * static_cast<double>(L);
        step_re_.push_back(std::cos(a));
        step_im_.push_back(-std::sin(a));
        for (std::size_t g = 0; g < points_.size(); ++g) {
            const Complex s = points_[g];
            const double r = std::exp(-s.real() * static_cast<double>(L));
            const double ang = -s.imag() * static_cast<double>(L);
            w_re_[g].push_back(r * std::cos(ang));
            w_im_[g].push_back(r * std::sin(ang));
        }
    }
    cut_ = new_cut;
    phase_re_.resize(cut_);
    phase_im_.resize(cut_);
    // Boundary data for the Euler-Maclaurin tail at the new cut.
    const double base = stride_ * static_cast<double>(cut_) + offset_;
    boundary_log_ = std::log(base);
    const double a = delta_ * boundary_log_;
    boundary_step_ = Complex(std::cos(a), -std::sin(a));
    for (std::size_t g = 0; g < points_.size(); ++g) {
        const Complex s = points_[g];
        boundary_weight_[g] = std::exp(-s * boundary_log_);
    }
}

void ArithmeticZetaProgression::reinit_phases(std::size_t k0) {
    for (std::size_t m = 0; m < cut_; ++m) {
        const Complex p = reduced_phase(k0, delta_, logs_l_[m]);
        phase_re_[m] = p.real();
        phase_im_[m] = p.imag();
    }
    boundary_phase_ = reduced_phase(k0, delta_, static_cast<long double>(boundary_log_));
    block_start_ = k0;
    cursor_ = k0;
    primed_ = true;
}

void ArithmeticZetaProgression::ensure_block(std::size_t k) {
    if (primed_ && k < cursor_)
        throw std::logic_error("ArithmeticZetaProgression: shift index must be nondecreasing");
    const std::size_t k_block = (k / kProgressionBlock) * kProgressionBlock;
    if (primed_ && k_block == block_start_) return;
    // Term count sized for the largest |t| reached within this block; the
    // Euler-Maclaurin ratio is governed by the count, not the base value.
    const double t_max = max_abs_t0_ +
                         delta_ * static_cast<double>(k_block + kProgressionBlock - 1);
    const std::size_t want = std::max<std::size_t>(
        static_cast<std::size_t>(options_.cut_factor * (t_max + 30.0)) + 1,
        static_cast<std::size_t>(options_.min_cut));
    grow_cut(want);
    reinit_phases(k_block);
}

void ArithmeticZetaProgression::values_at(std::size_t k, Complex* out) {
    ensure_block(k);
    while (cursor_ < k) {
        double* pr = phase_re_.data();
        double* pi = phase_im_.data();
        const double* sr = step_re_.data();
        const double* si = step_im_.data();
        for (std::size_t m = 0; m < cut_; ++m) {
            const double r = pr[m] * sr[m] - pi[m] * si[m];
            const double i = pr[m] * si[m] + pi[m] * sr[m];
            pr[m] = r;
            pi[m] = i;
        }
        boundary_phase_ *= boundary_step_;
        ++cursor_;
    }
    const double base = stride_ * static_cast<double>(cut_) + offset_;
    const double inv_b2 = 1.0 / (base * base);
    const double stride2 = stride_ * stride_;
    for (std::size_t g = 0; g < points_.size(); ++g) {
        const double* wr = w_re_[g].data();
        const double* wi = w_im_[g].data();
        const double* pr = phase_re_.data();
        const double* pi = phase_im_.data();
        double acc_re = 0.0, acc_im = 0.0;
        for (std::size_t m = 0; m < cut_; ++m) {
            acc_re += wr[m] * pr[m] - wi[m] * pi[m];
            acc_im += wr[m] * pi[m] + wi[m] * pr[m];
        }
        Complex result(acc_re, acc_im);
        // Tail at the current shifted point s = s_g + ik*delta.
        const Complex s = points_[g] + Complex(0.0, delta_ * static_cast<double>(k));
        const Complex u = boundary_weight_[g] * boundary_phase_;  // base^{-s}
        result += u * base / (stride_ * (s - 1.0));
        result += 0.5 * u;
        Complex poch = s;
        Complex power = u / base * stride_;  // stride^{2k-1} * base^{-s-2k+1}, k=1
        double prev_mag = 1e300;
        for (int q = 1; q <= options_.max_pairs; ++q) {
            const Complex term = bernoulli_over_factorial(static_cast<std::size_t>(q)) * poch *
                                 power;
            result += term;
            const double mag = std::abs(term);
            if (mag < 1e-12 * (1.0 + std::abs(result)) || mag > prev_mag) break;
            prev_mag = mag;
            poch *= (s + static_cast<double>(2 * q - 1)) * (s + static_cast<double>(2 * q));
            power *= stride2 * inv_b2;
        }
        out[g] = result;
    }
}

}  // namespace zetalab
