#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <utility>
#include <string_view>
#include <vector>

namespace sunflower {

// Arbitrary-precision unsigned integer, base 2^32 little-endian limbs.
// Sized for desk-scale exact combinatorics: a few hundred bits is typical,
// the one large case is materializing 2^65536 for the log* thresholds.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t x) {
        if (x) limbs_.push_back(static_cast<std::uint32_t>(x));
        if (x >> 32) limbs_.push_back(static_cast<std::uint32_t>(x >> 32));
    }

    static BigUint pow2(std::size_t k);
    static BigUint pow(std::uint64_t base, std::uint64_t exp);
    static BigUint pow(const BigUint& base, std::uint64_t exp);
    static BigUint factorial(std::uint64_t n);
    static BigUint binomial(std::uint64_t n, std::uint64_t k);
    static BigUint from_decimal(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    std::size_t bit_length() const;
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const {
        assert(fits_u64());
        std::uint64_t x = limbs_.empty() ? 0 : limbs_[0];
        if (limbs_.size() == 2) x |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        return x;
    }

    static int cmp(const BigUint& a, const BigUint& b);
    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return limbs_ != o.limbs_; }
    bool operator<(const BigUint& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const BigUint& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const BigUint& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const BigUint& o) const { return cmp(*this, o) >= 0; }

    BigUint operator+(const BigUint& o) const;
    BigUint operator-(const BigUint& o) const;  // requires *this >= o
    BigUint operator*(const BigUint& o) const;
    BigUint operator<<(std::size_t k) const;
    BigUint operator>>(std::size_t k) const;
    BigUint& operator+=(const BigUint& o) { return *this = *this + o; }
    BigUint& operator-=(const BigUint& o) { return *this = *this - o; }
    BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

    // (quotient, remainder); b must be nonzero.
    static std::pair<BigUint, BigUint> divmod(const BigUint& a, const BigUint& b);

    static BigUint gcd(BigUint a, BigUint b);  // Stein's algorithm

    std::string to_decimal() const;
    double to_double() const;

private:
    void normalize() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

// Signed integer on top of BigUint.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t x) : neg_(x < 0), mag_(x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x)) {}
    BigInt(BigUint mag, bool neg = false) : neg_(neg && !mag.is_zero()), mag_(std::move(mag)) {}

    const BigUint& magnitude() const { return mag_; }
    bool negative() const { return neg_; }
    bool is_zero() const { return mag_.is_zero(); }

    BigInt operator-() const { return BigInt(mag_, !neg_); }
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const { return *this + (-o); }
    BigInt operator*(const BigInt& o) const { return BigInt(mag_ * o.mag_, neg_ != o.neg_); }

    static int cmp(const BigInt& a, const BigInt& b);
    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(*this, o) >= 0; }

    std::string to_decimal() const { return (neg_ ? "-" : "") + mag_.to_decimal(); }
    double to_double() const { return neg_ ? -mag_.to_double() : mag_.to_double(); }

private:
    bool neg_ = false;
    BigUint mag_;
};

// Exact rational, canonical form: reduced, denominator positive, sign on the
// numerator, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t x) : num_(x), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);
    Rational(BigInt num, BigUint den);

    static Rational from_uint(BigUint n) { return Rational(BigInt(std::move(n)), BigUint(1)); }
    // "a/b", integer, or decimal ("0.125"); parsed exactly.
    static Rational parse(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigUint& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    bool negative() const { return num_.negative(); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const { return *this + o.negated(); }
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational negated() const { return Rational(-num_, den_, already_reduced{}); }
    Rational pow(std::uint64_t e) const;

    static int cmp(const Rational& a, const Rational& b);
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(*this, o) >= 0; }

    std::string to_string() const;
    double to_double() const;

    // Dyadic bounds on log2(x) for x > 0, within 2^-(frac_bits-1) of the true
    // value; upper rounds every step up, lower rounds down.  Keeps the branch
    // probabilities of the dichotomy checks exactly comparable.
    static Rational log2_upper(const Rational& x, unsigned frac_bits = 40);
    static Rational log2_lower(const Rational& x, unsigned frac_bits = 40);

private:
    struct already_reduced {};
    Rational(BigInt num, BigUint den, already_reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void reduce();

    BigInt num_;
    BigUint den_;
};

}  // namespace sunflower
