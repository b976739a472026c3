#pragma once

#include <cstdint>

#include "sunflower/num.hpp"
#include "sunflower/set_system.hpp"

namespace sunflower {

struct ShatterReport {
    Bitset witness;         // shattered set of maximum size, lexicographically least
    std::size_t dimension;  // = witness.count()
};

// True iff every subset of T appears as T ∩ S for some member S,
// i.e. |trace(H,T)| = 2^|T|.
bool shatters(const SetSystem& h, const Bitset& t);

// Exact VC-dimension with witness.  Ascends by witness size; only extensions
// of already-shattered sets are tested, which keeps the search polynomial
// whenever the dimension is small.  Refuses ground sets above max_ground
// rather than approximating.
ShatterReport vc_dimension(const SetSystem& h, std::size_t max_ground = 24);

// Sauer–Shelah bound: sum of C(n,i) for i = 0..d, exact.
BigUint sauer_shelah_bound(std::uint64_t n, std::uint64_t d);

}  // namespace sunflower
