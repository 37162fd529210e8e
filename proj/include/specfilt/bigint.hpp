#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace specfilt {

/// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
/// Zero is the empty limb vector with positive sign.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    /// Truncated quotient and remainder; remainder has the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && limbs_ == o.limbs_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }
    int cmp(const BigInt& o) const;

    static BigInt gcd(BigInt a, BigInt b);   // nonnegative
    BigInt abs() const;

    uint32_t mod_u32(uint32_t m) const;        // |this| mod m
    bool fits_i64() const;
    long long to_i64() const;                  // requires fits_i64()

    std::string to_string() const;
    size_t hash() const;

private:
    bool neg_ = false;
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

/// Exact rational number; denominator always positive, fraction reduced.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational inverse() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    int cmp(const Rational& o) const;
    bool operator<(const Rational& o) const { return cmp(o) < 0; }

    std::string to_string() const;  // "n" or "n/d"
    size_t hash() const;

private:
    BigInt num_, den_;
    void normalize();
};

/// Modular inverse of a mod p (p prime, 0 < a < p).
uint32_t inverse_mod(uint32_t a, uint32_t p);

bool is_prime_u32(uint32_t n);

}  // namespace specfilt
