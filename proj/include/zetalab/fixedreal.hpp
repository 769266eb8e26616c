// Fixed-point reals over BigInt: value = mantissa / 2^frac_bits.  Binary64
// cannot discriminate 30-50 digit residuals, so the relation detector
// evaluates logarithms and pi in this representation.
#pragma once

#include "zetalab/bigint.hpp"

namespace zetalab {

struct FixedReal {
    BigInt mantissa;
    unsigned frac_bits = 0;

    static FixedReal from_int(long long v, unsigned frac_bits);
    // Exact: every double is a binary rational.
    static FixedReal from_double(double v, unsigned frac_bits);
    double to_double() const;

    FixedReal operator-() const;
    FixedReal abs() const;
    friend FixedReal operator+(const FixedReal& a, const FixedReal& b);
    friend FixedReal operator-(const FixedReal& a, const FixedReal& b);
    friend FixedReal operator*(const FixedReal& a, const FixedReal& b);
    friend FixedReal operator/(const FixedReal& a, const FixedReal& b);
    FixedReal div_u32(std::uint32_t d) const;
    FixedReal mul_i64(long long f) const;
    int compare(const FixedReal& rhs) const;
    bool is_zero() const { return mantissa.is_zero(); }
};

// log of a positive big integer (argument reduction to [1,2) + atanh series).
FixedReal fixed_log(const BigInt& n, unsigned frac_bits);
// log(num/den) for positive big integers.
FixedReal fixed_log_rational(const BigInt& num, const BigInt& den, unsigned frac_bits);
// log of a positive double, treated as the exact binary rational it is.
FixedReal fixed_log_double(double x, unsigned frac_bits);
FixedReal fixed_log2(unsigned frac_bits);
FixedReal fixed_pi(unsigned frac_bits);

}  // namespace zetalab
