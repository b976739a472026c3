#include "sunflower/bounds.hpp"

#include <stdexcept>

namespace sunflower {

namespace {

// ceil(log2 x) for x >= 1.
std::uint64_t clog2_u64(std::uint64_t x) {
    if (x <= 1) return 0;
    return 64 - static_cast<std::uint64_t>(__builtin_clzll(x - 1));
}

}  // namespace

HalfInt log_star_smoothed(std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("log* undefined at 0");
    // Twice-values on the first four tower intervals; above 16 the shift
    // identity reduces the argument through ceil(log2).
    if (x == 1) return HalfInt::halves(1);
    if (x == 2) return HalfInt::halves(3);
    if (x == 3) return HalfInt::halves(4);
    if (x == 4) return HalfInt::halves(5);
    if (x <= 8) return HalfInt::halves(6);
    if (x <= 16) return HalfInt::halves(7);
    return log_star_smoothed(clog2_u64(x)).plus_whole(1);
}

HalfInt log_star_smoothed(const BigUint& x) {
    if (x.is_zero()) throw std::invalid_argument("log* undefined at 0");
    if (x.fits_u64()) return log_star_smoothed(x.to_u64());
    BigUint xm1 = x - BigUint(1);
    return log_star_smoothed(static_cast<std::uint64_t>(xm1.bit_length())).plus_whole(1);
}

HalfInt lambda_d(std::uint64_t d, std::uint64_t ell) {
    if (d == 0 || ell == 0) throw std::invalid_argument("lambda_d requires d >= 1 and ell >= 1");
    HalfInt ls = log_star_smoothed(ell);
    bool above_tower = 3 * d < 64 && ell > (std::uint64_t(1) << (3 * d));
    if (above_tower) return ls.plus_whole(2);
    bool above_square = static_cast<unsigned __int128>(ell) > static_cast<unsigned __int128>(9) * d * d;
    if (above_square) return ls.plus_whole(1);
    return ls;
}

Rational ell_zero(std::uint64_t d, const Rational& epsilon) {
    if (epsilon <= Rational(0) || epsilon > Rational(1, 2))
        throw std::invalid_argument("epsilon must lie in (0, 1/2]");
    Rational ratio = Rational::from_uint(BigUint(d)) / epsilon;
    return Rational(300) * ratio.pow(3);
}

BigUint er_bound(std::uint64_t r, std::uint64_t ell) {
    if (r == 0) throw std::invalid_argument("er_bound requires r >= 1");
    return BigUint::pow(r - 1, ell) * BigUint::factorial(ell);
}

BigUint vc1_threshold(std::uint64_t r, std::uint64_t ell) {
    if (r == 0) throw std::invalid_argument("vc1_threshold requires r >= 1");
    return BigUint::pow(r - 1, ell);
}

}  // namespace sunflower
