// Signed arbitrary-precision integers (32-bit limbs), sized for the
// lattice-reduction and fixed-point logarithm workloads: numbers up to a few
// thousand bits, schoolbook arithmetic.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zetalab {

class BigInt {
  public:
    BigInt() = default;
    BigInt(long long value);  // NOLINT(google-explicit-constructor)
    static BigInt from_uint64(std::uint64_t value);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_negative() const { return sign_ < 0; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

    // Truncated division (quotient toward zero, remainder has numerator sign).
    static void divrem(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);
    BigInt operator/(const BigInt& rhs) const;
    BigInt operator%(const BigInt& rhs) const;
    // Nearest integer to num/den, ties away from zero.
    static BigInt div_round_nearest(const BigInt& num, const BigInt& den);

    // In-place division by a small divisor; returns the remainder of the
    // magnitude (value keeps its sign convention: *this = trunc(this/d)).
    std::uint32_t divrem_u32(std::uint32_t divisor);
    BigInt& mul_u32(std::uint32_t factor);

    BigInt operator<<(unsigned bits) const;
    BigInt operator>>(unsigned bits) const;  // arithmetic toward zero on magnitude

    int compare(const BigInt& rhs) const;  // -1, 0, +1
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    std::size_t bit_length() const;
    // Magnitude as mantissa * 2^exp2 with mantissa in [0.5, 1); sign applied.
    double to_double() const;
    double to_double_scaled(long* exp2) const;
    // Fits in [-2^62, 2^62]?
    bool fits_int64() const;
    std::int64_t to_int64() const;
    std::string to_decimal_string() const;

  private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;  // little-endian, no leading zeros

    void trim();
    static int compare_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divrem_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

}  // namespace zetalab
