#include "zetalab/fixedreal.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace zetalab {

namespace {
void require_same_scale(const FixedReal& a, const FixedReal& b) {
    if (a.frac_bits != b.frac_bits)
        throw std::invalid_argument("FixedReal: mixed precisions");
}
}  // namespace

FixedReal FixedReal::from_int(long long v, unsigned frac_bits) {
    return {BigInt(v) << frac_bits, frac_bits};
}

FixedReal FixedReal::from_double(double v, unsigned frac_bits) {
    if (!std::isfinite(v)) throw std::invalid_argument("FixedReal: non-finite double");
    int e2 = 0;
    const double m = std::frexp(v, &e2);               // v = m * 2^e2, |m| in [0.5, 1)
    const double scaled = std::ldexp(m, 53);           // 53-bit integer
    BigInt mant(static_cast<long long>(scaled));
    const int shift = static_cast<int>(frac_bits) + e2 - 53;
    if (shift >= 0)
        mant = mant << static_cast<unsigned>(shift);
    else
        mant = mant >> static_cast<unsigned>(-shift);  // only when frac_bits < 53 - e2
    return {std::move(mant), frac_bits};
}

double FixedReal::to_double() const {
    long e2 = 0;
    const double m = mantissa.to_double_scaled(&e2);
    return std::ldexp(m, static_cast<int>(e2 - static_cast<long>(frac_bits)));
}

FixedReal FixedReal::operator-() const { return {-mantissa, frac_bits}; }
FixedReal FixedReal::abs() const { return {mantissa.abs(), frac_bits}; }

FixedReal operator+(const FixedReal& a, const FixedReal& b) {
    require_same_scale(a, b);
    return {a.mantissa + b.mantissa, a.frac_bits};
}

FixedReal operator-(const FixedReal& a, const FixedReal& b) {
    require_same_scale(a, b);
    return {a.mantissa - b.mantissa, a.frac_bits};
}

FixedReal operator*(const FixedReal& a, const FixedReal& b) {
    require_same_scale(a, b);
    return {(a.mantissa * b.mantissa) >> a.frac_bits, a.frac_bits};
}

FixedReal operator/(const FixedReal& a, const FixedReal& b) {
    require_same_scale(a, b);
    if (b.mantissa.is_zero()) throw std::domain_error("FixedReal: division by zero");
    return {(a.mantissa << a.frac_bits) / b.mantissa, a.frac_bits};
}

FixedReal FixedReal::div_u32(std::uint32_t d) const {
    FixedReal out = *this;
    out.mantissa.divrem_u32(d);
    return out;
}

FixedReal FixedReal::mul_i64(long long f) const { return {mantissa * BigInt(f), frac_bits}; }

int FixedReal::compare(const FixedReal& rhs) const {
    require_same_scale(*this, rhs);
    return mantissa.compare(rhs.mantissa);
}

namespace {

// atanh(x) = x + x^3/3 + x^5/5 + ...  for |x| < 1 given as a FixedReal.
FixedReal fixed_atanh(const FixedReal& x) {
    const FixedReal x2 = x * x;
    FixedReal term = x;
    FixedReal sum = x;
    for (std::uint32_t k = 3; ; k += 2) {
        term = term * x2;
        if (term.mantissa.is_zero()) break;
        sum = sum + term.div_u32(k);
        if (term.mantissa.bit_length() < 2) break;  // below one ulp
    }
    return sum;
}

// atan(1/k) by the Gregory series with exact small-divisor steps.
FixedReal fixed_atan_inv(std::uint32_t k, unsigned frac_bits) {
    const std::uint64_t k2 = static_cast<std::uint64_t>(k) * k;
    FixedReal term = FixedReal::from_int(1, frac_bits).div_u32(k);
    FixedReal sum = term;
    bool negative = true;
    for (std::uint32_t i = 3; ; i += 2, negative = !negative) {
        if (k2 <= 0xffffffffull) {
            term = term.div_u32(static_cast<std::uint32_t>(k2));
        } else {
            term = term.div_u32(k).div_u32(k);
        }
        if (term.mantissa.is_zero()) break;
        const FixedReal piece = term.div_u32(i);
        sum = negative ? sum - piece : sum + piece;
        if (term.mantissa.bit_length() < 2) break;
    }
    return sum;
}

}  // namespace

FixedReal fixed_log2(unsigned frac_bits) {
    static std::mutex mu;
    static std::map<unsigned, FixedReal> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(frac_bits);
    if (it != cache.end()) return it->second;
    // log 2 = 2 * atanh(1/3).
    const FixedReal third = FixedReal::from_int(1, frac_bits).div_u32(3);
    FixedReal value = fixed_atanh(third).mul_i64(2);
    cache[frac_bits] = value;
    return value;
}

FixedReal fixed_pi(unsigned frac_bits) {
    static std::mutex mu;
    static std::map<unsigned, FixedReal> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(frac_bits);
    if (it != cache.end()) return it->second;
    // Machin: pi = 16*atan(1/5) - 4*atan(1/239).
    FixedReal value =
        fixed_atan_inv(5, frac_bits).mul_i64(16) - fixed_atan_inv(239, frac_bits).mul_i64(4);
    cache[frac_bits] = value;
    return value;
}

FixedReal fixed_log(const BigInt& n, unsigned frac_bits) {
    if (n.sign() <= 0) throw std::domain_error("fixed_log: argument must be positive");
    // n = 2^k * r with r in [1, 2).
    const long k = static_cast<long>(n.bit_length()) - 1;
    FixedReal r{(n << frac_bits) >> static_cast<unsigned>(k), frac_bits};
    // log r = 2*atanh((r-1)/(r+1)), argument in [0, 1/3).
    const FixedReal one = FixedReal::from_int(1, frac_bits);
    const FixedReal t = (r - one) / (r + one);
    FixedReal value = fixed_atanh(t).mul_i64(2);
    if (k != 0) value = value + fixed_log2(frac_bits).mul_i64(k);
    return value;
}

FixedReal fixed_log_rational(const BigInt& num, const BigInt& den, unsigned frac_bits) {
    return fixed_log(num, frac_bits) - fixed_log(den, frac_bits);
}

FixedReal fixed_log_double(double x, unsigned frac_bits) {
    if (!(x > 0.0)) throw std::domain_error("fixed_log_double: argument must be positive");
    int e2 = 0;
    const double m = std::frexp(x, &e2);
    const long long mant = static_cast<long long>(std::ldexp(m, 53));  // x = mant * 2^{e2-53}
    FixedReal value = fixed_log(BigInt(mant), frac_bits);
    const long shift = e2 - 53;
    if (shift != 0) value = value + fixed_log2(frac_bits).mul_i64(shift);
    return value;
}

}  // namespace zetalab
