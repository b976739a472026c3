#include "sunflower/num.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sunflower {

BigUint BigUint::pow2(std::size_t k) {
    BigUint r;
    r.limbs_.assign(k / 32 + 1, 0);
    r.limbs_.back() = 1u << (k % 32);
    return r;
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    std::size_t top = 32 - static_cast<std::size_t>(__builtin_clz(limbs_.back()));
    return (limbs_.size() - 1) * 32 + top;
}

int BigUint::cmp(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

BigUint BigUint::operator+(const BigUint& o) const {
    BigUint r;
    std::size_t n = std::max(limbs_.size(), o.limbs_.size());
    r.limbs_.resize(n);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = carry;
        if (i < limbs_.size()) s += limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        r.limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

BigUint BigUint::operator-(const BigUint& o) const {
    assert(cmp(*this, o) >= 0);
    BigUint r;
    r.limbs_.resize(limbs_.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow - (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
        borrow = 0;
        if (d < 0) {
            d += 1ll << 32;
            borrow = 1;
        }
        r.limbs_[i] = static_cast<std::uint32_t>(d);
    }
    r.normalize();
    return r;
}

BigUint BigUint::operator*(const BigUint& o) const {
    if (is_zero() || o.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = limbs_[i];
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] + ai * o.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.normalize();
    return r;
}

BigUint BigUint::operator<<(std::size_t k) const {
    if (is_zero()) return BigUint();
    std::size_t limb_shift = k / 32, bit_shift = k % 32;
    BigUint r;
    r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
        r.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(v);
        r.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    r.normalize();
    return r;
}

BigUint BigUint::operator>>(std::size_t k) const {
    std::size_t limb_shift = k / 32, bit_shift = k % 32;
    if (limb_shift >= limbs_.size()) return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        std::uint64_t v = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift && i + limb_shift + 1 < limbs_.size())
            v |= static_cast<std::uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
        r.limbs_[i] = static_cast<std::uint32_t>(v);
    }
    r.normalize();
    return r;
}

std::pair<BigUint, BigUint> BigUint::divmod(const BigUint& a, const BigUint& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (cmp(a, b) < 0) return {BigUint(), a};
    // Shift-subtract long division; operands stay small enough for this to
    // be unproblematic (its heaviest client is reducing rationals).
    std::size_t shift = a.bit_length() - b.bit_length();
    BigUint rem = a;
    BigUint div = b << shift;
    BigUint quot;
    quot.limbs_.assign(shift / 32 + 1, 0);
    for (std::size_t s = shift + 1; s-- > 0;) {
        if (cmp(rem, div) >= 0) {
            rem -= div;
            quot.limbs_[s / 32] |= 1u << (s % 32);
        }
        div = div >> 1;
    }
    quot.normalize();
    return {std::move(quot), std::move(rem)};
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto trailing_zeros = [](const BigUint& x) {
        std::size_t tz = 0;
        for (std::size_t i = 0; i < x.limbs_.size(); ++i) {
            if (x.limbs_[i]) return tz + static_cast<std::size_t>(__builtin_ctz(x.limbs_[i]));
            tz += 32;
        }
        return tz;
    };
    std::size_t az = trailing_zeros(a), bz = trailing_zeros(b);
    std::size_t common = std::min(az, bz);
    a = a >> az;
    b = b >> bz;
    while (true) {
        int c = cmp(a, b);
        if (c == 0) break;
        if (c < 0) std::swap(a, b);
        a -= b;
        a = a >> trailing_zeros(a);
    }
    return a << common;
}

BigUint BigUint::pow(std::uint64_t base, std::uint64_t exp) { return pow(BigUint(base), exp); }

BigUint BigUint::pow(const BigUint& base, std::uint64_t exp) {
    BigUint r(1), b = base;
    while (exp) {
        if (exp & 1) r *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return r;
}

BigUint BigUint::factorial(std::uint64_t n) {
    BigUint r(1);
    for (std::uint64_t i = 2; i <= n; ++i) r *= BigUint(i);
    return r;
}

BigUint BigUint::binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigUint();
    if (k > n - k) k = n - k;
    BigUint r(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= BigUint(n - k + i);
        r = divmod(r, BigUint(i)).first;  // exact at every step
    }
    return r;
}

BigUint BigUint::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    BigUint r;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
        r = r * BigUint(10) + BigUint(static_cast<std::uint64_t>(c - '0'));
    }
    return r;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    std::string out;
    BigUint rest = *this;
    const BigUint chunk(1000000000ull);
    while (!rest.is_zero()) {
        auto [q, r] = divmod(rest, chunk);
        std::uint64_t digits = r.is_zero() ? 0 : r.to_u64();
        std::string part = std::to_string(digits);
        if (!q.is_zero()) part = std::string(9 - part.size(), '0') + part;
        out = part + out;
        rest = std::move(q);
    }
    return out;
}

double BigUint::to_double() const {
    if (is_zero()) return 0.0;
    std::size_t bits = bit_length();
    if (bits <= 64) return static_cast<double>(to_u64());
    BigUint top = *this >> (bits - 64);
    return std::ldexp(static_cast<double>(top.to_u64()), static_cast<int>(bits - 64));
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (neg_ == o.neg_) return BigInt(mag_ + o.mag_, neg_);
    int c = BigUint::cmp(mag_, o.mag_);
    if (c == 0) return BigInt();
    if (c > 0) return BigInt(mag_ - o.mag_, neg_);
    return BigInt(o.mag_ - mag_, o.neg_);
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.neg_ != b.neg_) return a.neg_ ? -1 : 1;
    int c = BigUint::cmp(a.mag_, b.mag_);
    return a.neg_ ? -c : c;
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num_ = -num_;
        den = -den;
    }
    den_ = BigUint(static_cast<std::uint64_t>(den));
    reduce();
}

Rational::Rational(BigInt num, BigUint den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (num_.is_zero()) {
        den_ = BigUint(1);
        return;
    }
    BigUint g = BigUint::gcd(num_.magnitude(), den_);
    if (!g.is_one()) {
        num_ = BigInt(BigUint::divmod(num_.magnitude(), g).first, num_.negative());
        den_ = BigUint::divmod(den_, g).first;
    }
}

Rational Rational::operator+(const Rational& o) const {
    BigInt n = num_ * BigInt(o.den_) + o.num_ * BigInt(den_);
    return Rational(std::move(n), den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(num_ * BigInt(o.den_, o.num_.negative()), den_ * o.num_.magnitude());
}

Rational Rational::pow(std::uint64_t e) const {
    if (e == 0) return Rational(1);
    bool neg = num_.negative() && (e & 1);
    // gcd(num,den)=1 implies gcd(num^e,den^e)=1, so no reduction needed.
    return Rational(BigInt(BigUint::pow(num_.magnitude(), e), neg), BigUint::pow(den_, e), already_reduced{});
}

int Rational::cmp(const Rational& a, const Rational& b) {
    return BigInt::cmp(a.num_ * BigInt(b.den_), b.num_ * BigInt(a.den_));
}

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        BigUint n = BigUint::from_decimal(s.substr(0, slash));
        BigUint d = BigUint::from_decimal(s.substr(slash + 1));
        return Rational(BigInt(std::move(n), neg), std::move(d));
    }
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string digits(s.substr(0, dot));
        std::string_view frac = s.substr(dot + 1);
        digits.append(frac);
        BigUint n = BigUint::from_decimal(digits.empty() ? "0" : digits);
        BigUint d = BigUint::pow(10, frac.size());
        return Rational(BigInt(std::move(n), neg), std::move(d));
    }
    return Rational(BigInt(BigUint::from_decimal(s), neg), BigUint(1));
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

namespace {

// Directed dyadic approximation of log2(N) for integer N >= 1, with `frac`
// fractional bits.  The mantissa is kept in 96.96 fixed point; squaring with
// one-sided rounding makes the emitted bit string an upper (resp. lower)
// bound of the true binary expansion.
Rational log2_integer(const BigUint& n, unsigned frac, bool round_up) {
    assert(!n.is_zero());
    std::size_t e = n.bit_length() - 1;  // n in [2^e, 2^(e+1))
    const unsigned kMantissaBits = 96;
    bool rounded = false;
    auto shift_down = [&](const BigUint& v, std::size_t k) {
        BigUint q = v >> k;
        if ((q << k) != v) {
            rounded = true;
            if (round_up) q += BigUint(1);
        }
        return q;
    };
    // m / 2^96 in [1, 2), rounded in the chosen direction.
    BigUint m = shift_down(n << kMantissaBits, e);

    BigUint frac_num;  // accumulates the fractional bits
    const BigUint one = BigUint::pow2(kMantissaBits);
    const BigUint two = BigUint::pow2(kMantissaBits + 1);
    for (unsigned j = 0; j < frac; ++j) {
        m = shift_down(m * m, kMantissaBits);
        frac_num = frac_num << 1;
        if (m >= two) {
            frac_num += BigUint(1);
            m = shift_down(m, 1);
        }
    }
    BigUint total = (BigUint(e) << frac) + frac_num;
    bool exact = !rounded && m == one;  // remaining mantissa is exactly 1.0
    if (round_up && !exact) total += BigUint(1);  // absorb the truncated tail
    return Rational(BigInt(std::move(total)), BigUint::pow2(frac));
}

}  // namespace

Rational Rational::log2_upper(const Rational& x, unsigned frac_bits) {
    if (x <= Rational(0)) throw std::domain_error("log2 of a non-positive value");
    return log2_integer(x.num().magnitude(), frac_bits, true) - log2_integer(x.den(), frac_bits, false);
}

Rational Rational::log2_lower(const Rational& x, unsigned frac_bits) {
    if (x <= Rational(0)) throw std::domain_error("log2 of a non-positive value");
    return log2_integer(x.num().magnitude(), frac_bits, false) - log2_integer(x.den(), frac_bits, true);
}

}  // namespace sunflower
