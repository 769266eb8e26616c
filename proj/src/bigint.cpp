#include "zetalab/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zetalab {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value < 0 ? -1 : 1;
    std::uint64_t mag = value < 0 ? ~static_cast<std::uint64_t>(value) + 1
                                  : static_cast<std::uint64_t>(value);
    while (mag != 0) {
        mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

BigInt BigInt::from_uint64(std::uint64_t value) {
    BigInt out;
    if (value == 0) return out;
    out.sign_ = 1;
    while (value != 0) {
        out.mag_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        value >>= 32;
    }
    return out;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const std::vector<std::uint32_t>&big = a.size() >= b.size() ? a : b,
                                    &small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t sum = carry + big[i] + (i < small.size() ? small[i] : 0u);
        out[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    out[big.size()] = static_cast<std::uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(diff);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) {
        *this = rhs;
        return *this;
    }
    if (sign_ == rhs.sign_) {
        mag_ = add_mag(mag_, rhs.mag_);
        return *this;
    }
    const int cmp = compare_mag(mag_, rhs.mag_);
    if (cmp == 0) {
        sign_ = 0;
        mag_.clear();
        return *this;
    }
    if (cmp > 0) {
        mag_ = sub_mag(mag_, rhs.mag_);
    } else {
        mag_ = sub_mag(rhs.mag_, mag_);
        sign_ = rhs.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    BigInt out;
    if (lhs.sign_ == 0 || rhs.sign_ == 0) return out;
    out.sign_ = lhs.sign_ * rhs.sign_;
    out.mag_.assign(lhs.mag_.size() + rhs.mag_.size(), 0);
    for (std::size_t i = 0; i < lhs.mag_.size(); ++i) {
        std::uint64_t carry = 0;
        const std::uint64_t a = lhs.mag_[i];
        for (std::size_t j = 0; j < rhs.mag_.size(); ++j) {
            std::uint64_t cur = out.mag_[i + j] + a * rhs.mag_[j] + carry;
            out.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.mag_.size();
        while (carry != 0) {
            std::uint64_t cur = out.mag_[k] + carry;
            out.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    *this = *this * rhs;
    return *this;
}

void BigInt::divrem_mag(const std::vector<std::uint32_t>& u_in,
                        const std::vector<std::uint32_t>& v_in, std::vector<std::uint32_t>& q,
                        std::vector<std::uint32_t>& r) {
    // Knuth algorithm D on 32-bit limbs with 64-bit intermediates.
    q.clear();
    r.clear();
    if (v_in.empty()) throw std::domain_error("BigInt: division by zero");
    if (compare_mag(u_in, v_in) < 0) {
        r = u_in;
        return;
    }
    if (v_in.size() == 1) {
        const std::uint64_t d = v_in[0];
        q.assign(u_in.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = u_in.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | u_in[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    const std::size_t n = v_in.size();
    const std::size_t m = u_in.size() - n;
    // Normalize so the top limb of v has its high bit set.
    unsigned shift = 0;
    for (std::uint32_t top = v_in.back(); (top & 0x80000000u) == 0; top <<= 1) ++shift;
    std::vector<std::uint32_t> u(u_in.size() + 1, 0), v(n, 0);
    if (shift == 0) {
        v = v_in;
        std::copy(u_in.begin(), u_in.end(), u.begin());
    } else {
        v[0] = v_in[0] << shift;
        for (std::size_t i = 1; i < n; ++i)
            v[i] = (v_in[i] << shift) | (v_in[i - 1] >> (32 - shift));
        u[0] = u_in[0] << shift;
        for (std::size_t i = 1; i < u_in.size(); ++i)
            u[i] = (u_in[i] << shift) | (u_in[i - 1] >> (32 - shift));
        u[u_in.size()] = u_in.back() >> (32 - shift);
    }

    q.assign(m + 1, 0);
    const std::uint64_t vtop = v[n - 1], vnext = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        const std::uint64_t numhi = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = numhi / vtop;
        std::uint64_t rhat = numhi % vtop;
        if (qhat >= kBase) {
            qhat = kBase - 1;
            rhat = numhi - qhat * vtop;
        }
        while (rhat < kBase && qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }
        // Multiply-subtract qhat * v from u[j .. j+n].
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t prod = qhat * v[i] + carry;
            carry = prod >> 32;
            std::int64_t diff = static_cast<std::int64_t>(u[i + j]) -
                                static_cast<std::int64_t>(prod & 0xffffffffu) - borrow;
            if (diff < 0) {
                diff += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(diff);
        }
        std::int64_t diff = static_cast<std::int64_t>(u[j + n]) -
                            static_cast<std::int64_t>(carry) - borrow;
        if (diff < 0) {
            // Add back: qhat was one too large.
            diff += static_cast<std::int64_t>(kBase);
            u[j + n] = static_cast<std::uint32_t>(diff);
            --qhat;
            std::uint64_t carry2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t sum = static_cast<std::uint64_t>(u[i + j]) + v[i] + carry2;
                u[i + j] = static_cast<std::uint32_t>(sum & 0xffffffffu);
                carry2 = sum >> 32;
            }
            u[j + n] = static_cast<std::uint32_t>(u[j + n] + carry2);
        } else {
            u[j + n] = static_cast<std::uint32_t>(diff);
        }
        q[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // Denormalize remainder.
    r.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = u[i] >> shift;
        if (shift != 0 && i + 1 < u.size()) r[i] |= static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(u[i + 1]) << (32 - shift));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

void BigInt::divrem(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
    if (den.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    std::vector<std::uint32_t> q, r;
    divrem_mag(num.mag_, den.mag_, q, r);
    quot.mag_ = std::move(q);
    quot.sign_ = quot.mag_.empty() ? 0 : num.sign_ * den.sign_;
    rem.mag_ = std::move(r);
    rem.sign_ = rem.mag_.empty() ? 0 : num.sign_;
}

BigInt BigInt::operator/(const BigInt& rhs) const {
    BigInt q, r;
    divrem(*this, rhs, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
    BigInt q, r;
    divrem(*this, rhs, q, r);
    return r;
}

BigInt BigInt::div_round_nearest(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    divrem(num, den, q, r);
    if (r.is_zero()) return q;
    // |r| * 2 >= |den|  ->  round away from zero.
    BigInt twice = r.abs();
    twice += twice;
    if (compare_mag(twice.mag_, den.mag_) >= 0) {
        const int result_sign = num.sign_ * den.sign_;
        q += BigInt(result_sign > 0 ? 1 : -1);
    }
    return q;
}

std::uint32_t BigInt::divrem_u32(std::uint32_t divisor) {
    if (divisor == 0) throw std::domain_error("BigInt: division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | mag_[i];
        mag_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigInt& BigInt::mul_u32(std::uint32_t factor) {
    if (factor == 0 || sign_ == 0) {
        sign_ = 0;
        mag_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(mag_[i]) * factor + carry;
        mag_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry != 0) mag_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigInt BigInt::operator<<(unsigned bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    BigInt out;
    out.sign_ = sign_;
    const unsigned limbs = bits / 32, rem = bits % 32;
    out.mag_.assign(mag_.size() + limbs + 1, 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        const std::uint64_t cur = static_cast<std::uint64_t>(mag_[i]) << rem;
        out.mag_[i + limbs] |= static_cast<std::uint32_t>(cur & 0xffffffffu);
        out.mag_[i + limbs + 1] |= static_cast<std::uint32_t>(cur >> 32);
    }
    out.trim();
    return out;
}

BigInt BigInt::operator>>(unsigned bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    const unsigned limbs = bits / 32, rem = bits % 32;
    if (limbs >= mag_.size()) return BigInt();
    BigInt out;
    out.sign_ = sign_;
    out.mag_.assign(mag_.size() - limbs, 0);
    for (std::size_t i = 0; i < out.mag_.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(mag_[i + limbs]) >> rem;
        if (rem != 0 && i + limbs + 1 < mag_.size())
            cur |= static_cast<std::uint64_t>(mag_[i + limbs + 1]) << (32 - rem);
        out.mag_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
    }
    out.trim();
    return out;
}

int BigInt::compare(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ < rhs.sign_ ? -1 : 1;
    const int mag_cmp = compare_mag(mag_, rhs.mag_);
    return sign_ >= 0 ? mag_cmp : -mag_cmp;
}

std::size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    std::size_t bits = (mag_.size() - 1) * 32;
    std::uint32_t top = mag_.back();
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

double BigInt::to_double_scaled(long* exp2) const {
    if (sign_ == 0) {
        *exp2 = 0;
        return 0.0;
    }
    // Top three limbs give > 64 significant bits.
    const std::size_t take = std::min<std::size_t>(mag_.size(), 3);
    double mant = 0.0;
    for (std::size_t k = 0; k < take; ++k)
        mant = mant * static_cast<double>(kBase) + static_cast<double>(mag_[mag_.size() - 1 - k]);
    const long dropped = static_cast<long>(32 * (mag_.size() - take));
    int e2 = 0;
    const double frac = std::frexp(mant, &e2);
    *exp2 = dropped + e2;
    return sign_ < 0 ? -frac : frac;
}

double BigInt::to_double() const {
    long e = 0;
    const double m = to_double_scaled(&e);
    return std::ldexp(m, static_cast<int>(e));
}

bool BigInt::fits_int64() const { return bit_length() <= 62; }

std::int64_t BigInt::to_int64() const {
    std::int64_t value = 0;
    for (std::size_t i = mag_.size(); i-- > 0;)
        value = (value << 32) | static_cast<std::int64_t>(mag_[i]);
    return sign_ < 0 ? -value : value;
}

std::string BigInt::to_decimal_string() const {
    if (sign_ == 0) return "0";
    BigInt tmp = abs();
    std::string digits;
    while (!tmp.is_zero()) {
        const std::uint32_t chunk = tmp.divrem_u32(1000000000u);
        std::string part = std::to_string(chunk);
        if (!tmp.is_zero()) part.insert(0, 9 - part.size(), '0');
        digits.insert(0, part);
    }
    return sign_ < 0 ? "-" + digits : digits;
}

}  // namespace zetalab
