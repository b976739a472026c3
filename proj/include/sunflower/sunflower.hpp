#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>

#include "sunflower/set_system.hpp"

namespace sunflower {

// Certificate for an r-sunflower: member indices into the host system plus
// the kernel.  All pairwise intersections of the members equal the kernel
// and the petals (members minus kernel) are pairwise disjoint.  For r = 1
// the kernel is the single member by convention.
struct Sunflower {
    std::vector<int> members;
    Bitset kernel;

    std::size_t r() const { return members.size(); }
};

// The structural obstruction of the VC-1 argument: elements x != y and
// members realizing the traces {x}, {y} and {x,y} on the pair {x,y}.
struct StructWitness {
    int x, y;
    int s_x, s_y, s_xy;
};

struct Inconclusive {};

using WitnessOutcome = std::variant<Sunflower, StructWitness, Inconclusive>;

// Checks the pairwise-intersection certificate; returns the sunflower (with
// its kernel) when members form one.  Indices must be distinct and valid.
std::optional<Sunflower> is_sunflower(const SetSystem& h, std::span<const int> members);

bool validate_witness(const SetSystem& h, const StructWitness& w);

// Complete search for an r-sunflower.  Candidate kernels are the empty set
// plus all pairwise intersections of members (for r >= 2 the kernel must be
// one of those); for each kernel the petals form a set-packing instance
// solved by branch-and-bound.  Deterministic: kernels in a fixed order,
// first packing found wins.
std::optional<Sunflower> find_sunflower_exact(const SetSystem& h, int r);

// The Erdos–Rado greedy extractor: a maximal pairwise-disjoint subfamily if
// it is large enough, otherwise recurse on the link of the most popular
// element.  Guaranteed to succeed when |H| > (r-1)^ell * ell!.
std::optional<Sunflower> extract_er(const SetSystem& h, int r);

// The recursion behind the VC-1 structural lemma: pads members to uniform
// size, builds a maximal disjoint sequence, and either finds a sunflower,
// finds a StructWitness, or strips the minimal chain intersection and
// recurses.  Never Inconclusive when |H| > (r-1)^ell.
WitnessOutcome witness_or_sunflower(const SetSystem& h, int r);

// Constructive extraction for families with VC-dimension <= 1 and
// |H| > (r-1)^ell.  Throws a diagnostic error naming the violated hypothesis
// if the preconditions fail (including a VC >= 2 structure surfacing during
// the recursion).
Sunflower extract_vc1(const SetSystem& h, int r);

// Randomized disjoint-family search: partitions the ground set into 2r parts
// uniformly at random and looks for r parts each fully containing a member.
// Deterministic given the seed.
std::optional<Sunflower> disjoint_via_partition(const SetSystem& h, int r, int trials, std::uint64_t seed);

}  // namespace sunflower
