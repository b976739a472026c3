#pragma once

#include <cstdint>
#include <string>

#include "sunflower/num.hpp"

namespace sunflower {

// Exact half-integer (stored doubled); the value range of the smoothed
// iterated logarithm and of lambda_d.
class HalfInt {
public:
    HalfInt() = default;
    static HalfInt whole(std::uint64_t v) { return HalfInt(2 * v); }
    static HalfInt halves(std::uint64_t twice) { return HalfInt(twice); }

    std::uint64_t twice() const { return twice_; }
    bool is_whole() const { return twice_ % 2 == 0; }

    HalfInt operator+(const HalfInt& o) const { return HalfInt(twice_ + o.twice_); }
    HalfInt plus_whole(std::uint64_t v) const { return HalfInt(twice_ + 2 * v); }
    HalfInt plus_half() const { return HalfInt(twice_ + 1); }

    bool operator==(const HalfInt& o) const { return twice_ == o.twice_; }
    bool operator!=(const HalfInt& o) const { return twice_ != o.twice_; }
    bool operator<(const HalfInt& o) const { return twice_ < o.twice_; }
    bool operator<=(const HalfInt& o) const { return twice_ <= o.twice_; }
    bool operator>(const HalfInt& o) const { return twice_ > o.twice_; }
    bool operator>=(const HalfInt& o) const { return twice_ >= o.twice_; }

    Rational to_rational() const { return Rational(static_cast<std::int64_t>(twice_), 2); }
    std::string to_string() const {
        if (is_whole()) return std::to_string(twice_ / 2);
        return std::to_string(twice_ / 2) + ".5";
    }

private:
    explicit HalfInt(std::uint64_t twice) : twice_(twice) {}
    std::uint64_t twice_ = 0;
};

// Smoothed iterated binary logarithm.  Every interval between consecutive
// towers of 2s is split at the tower whose top 2 is replaced by a 3, the
// first half keeping the whole value and the second half adding 1/2; the
// pattern is extended all the way down, so log*(1) = 1/2, log*(2) = 3/2,
// log*(3) = 2, log*(4) = 5/2, ..., and the shift identity
// log*(2^x) = log*(x) + 1 holds for every x >= 1.  x = 0 is an error.
HalfInt log_star_smoothed(std::uint64_t x);
HalfInt log_star_smoothed(const BigUint& x);

// lambda_d(ell): log* ell plus 2, 1 or 0 according to whether ell exceeds
// 2^(3d), lies in (9d^2, 2^(3d)], or is at most 9d^2.  Requires d, ell >= 1.
HalfInt lambda_d(std::uint64_t d, std::uint64_t ell);

// 300 (d / epsilon)^3, exact; epsilon must lie in (0, 1/2].
Rational ell_zero(std::uint64_t d, const Rational& epsilon);

// Erdos–Rado sunflower bound (r-1)^ell * ell!.
BigUint er_bound(std::uint64_t r, std::uint64_t ell);

// Sharp threshold for VC-dimension-1 families: (r-1)^ell.
BigUint vc1_threshold(std::uint64_t r, std::uint64_t ell);

}  // namespace sunflower
