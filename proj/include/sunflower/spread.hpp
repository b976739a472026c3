#pragma once

#include <cstdint>

#include "sunflower/num.hpp"
#include "sunflower/set_system.hpp"

namespace sunflower {

// How the representative F(S) is picked among the minimal sets contained in
// S \ W.  The counting lemmas hold for any fixed rule; two rules guard the
// tests against accidental chooser dependence.
enum class ChooserKind { lexicographic, seeded_random };

struct ChooserRule {
    ChooserKind kind = ChooserKind::lexicographic;
    std::uint64_t seed = 0;
};

// The W-decomposition of a family: per-member representatives F(S) from the
// reduced family, their core extensions F*(S), and the small/large split at
// the size threshold t.
struct SpreadDecomposition {
    Bitset w;
    std::size_t t = 0;
    std::vector<Bitset> chosen;  // F(S), indexed like the host family
    std::vector<Bitset> f_star;  // F*(S) = S ∩ core(H, W ∪ F(S))
    SetSystem small;             // {F(S)  : |F(S)| < t}
    SetSystem large;             // {F*(S) : |F(S)| >= t}
};

// Inclusion-minimal sets of {S \ W : S ∈ H}, on the same ground.
SetSystem reduced_family(const SetSystem& h, const Bitset& w);

SpreadDecomposition decompose(const SetSystem& h, const Bitset& w, std::size_t t, ChooserRule rule = {});

struct SpreadLimits {
    std::size_t max_exact_n = 16;
    unsigned threads = 1;
};

// E[ sum over F in large(W,t) of q^|F| ] for W ~ X_p, evaluated exactly by
// enumerating all 2^n choices of W.
Rational expectation_large_weight_exact(const SetSystem& h, const Rational& p, const Rational& q, std::size_t t,
                                        ChooserRule rule = {}, const SpreadLimits& limits = {});

// Right-hand sides of the two counting lemmas, with e replaced by the fixed
// rational upper bound 2.7182818285 so the computed bounds only over-estimate.
Rational count_bound(std::uint64_t ell, std::uint64_t d, const Rational& q, const Rational& p, std::uint64_t t);
Rational count_bound_vc1(const Rational& q, const Rational& p, std::uint64_t t);

}  // namespace sunflower
