#pragma once

#include <cstdint>

#include "sunflower/set_system.hpp"

namespace sunflower {

// splitmix64: tiny deterministic generator, identical on every platform.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n >= 1.
    std::uint64_t below(std::uint64_t n) {
        // Rejection keeps the draw exactly uniform.
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        Rng r(a ^ (b * 0xff51afd7ed558ccdull + 0x2545f4914f6cdd1dull));
        return r.next();
    }
};

// The extremal construction: ground set = edges of the rooted complete
// (r-1)-ary tree of depth ell, members = edge sets of the (r-1)^ell
// leaf-to-root paths.  Edge labels are child-path strings ("0.2.1").
SetSystem tree_family(std::uint64_t r, std::uint64_t ell);

// Uniform-size padding with member-unique fresh elements.  The original
// ground occupies indices [0, original_n), so stripping a padded mask is a
// resize; member order and indices are preserved.
struct PaddedFamily {
    SetSystem padded;
    std::size_t original_n;

    Bitset strip(const Bitset& padded_mask) const { return padded_mask.resized(original_n); }
};

PaddedFamily pad_to_uniform(const SetSystem& h, std::size_t ell);

enum class FamilyKind {
    uniform_random,  // distinct subsets of size <= ell, uniform
    forest_path,     // root-paths in a random forest: VC-dimension <= 1
    rejection_vc1,   // uniform_random filtered by VC-dimension <= 1
};

struct GeneratorConfig {
    std::size_t n = 0;
    std::size_t ell = 0;
    std::size_t family_size = 0;
    std::uint64_t seed = 0;
    FamilyKind kind = FamilyKind::uniform_random;
};

SetSystem random_family(const GeneratorConfig& cfg);

}  // namespace sunflower
