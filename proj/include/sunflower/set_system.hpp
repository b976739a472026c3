#pragma once

#include <string>
#include <vector>

#include "sunflower/bitset.hpp"

namespace sunflower {

// A finite set system: ordered ground-set labels plus a family of distinct
// subsets stored as index masks.  Families are sets of sets, so construction
// deduplicates; member order is first-occurrence order and every operation
// that returns a family preserves this convention.
struct SetSystem {
    std::vector<std::string> ground;
    std::vector<Bitset> members;

    std::size_t n() const { return ground.size(); }
    std::size_t size() const { return members.size(); }

    // Maximum member cardinality (0 for the empty family); the system is
    // ell-bounded for every bound >= ell().
    std::size_t ell() const {
        std::size_t m = 0;
        for (const Bitset& s : members) m = std::max(m, s.count());
        return m;
    }

    bool has_member(const Bitset& s) const {
        for (const Bitset& m : members)
            if (m == s) return true;
        return false;
    }
};

// Builds a canonical SetSystem from labels.  Duplicate labels within a set
// collapse; duplicate sets collapse; unknown labels and duplicate ground
// labels are input errors.
SetSystem build_system(const std::vector<std::string>& ground, const std::vector<std::vector<std::string>>& sets);

// Convenience constructor over the anonymous ground x0..x{n-1}.
SetSystem make_family(std::size_t n, const std::vector<std::vector<int>>& sets);

// Appends member masks (on the same ground) with deduplication.
SetSystem family_from_masks(std::vector<std::string> ground, const std::vector<Bitset>& masks);

// The trace {S ∩ U : S ∈ H} as a system on ground U (re-indexed, deduplicated).
SetSystem trace(const SetSystem& h, const Bitset& u);

// True iff some member of H is contained in A, i.e. A ∈ ⟨H⟩.
bool upset_contains(const SetSystem& h, const Bitset& a);

// The inclusion-minimal members; the result is an antichain on the same ground.
SetSystem minimal_sets(const SetSystem& family);

// Intersection of all members contained in A; requires A ∈ ⟨H⟩.
Bitset core(const SetSystem& h, const Bitset& a);

}  // namespace sunflower
