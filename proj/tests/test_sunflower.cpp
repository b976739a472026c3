#include <doctest.h>

#include <stdexcept>

#include <functional>

#include "sunflower/bounds.hpp"
#include "sunflower/gen.hpp"
#include "sunflower/sunflower.hpp"
#include "sunflower/vc.hpp"

using namespace sunflower;

namespace {

// Independent oracle: enumerate all r-subsets of the family and test the
// pairwise-intersection condition directly.
bool oracle_has_sunflower(const SetSystem& h, int r) {
    std::vector<int> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == static_cast<std::size_t>(r)) {
            if (r == 1) return true;
            Bitset kernel =
                h.members[static_cast<std::size_t>(pick[0])] & h.members[static_cast<std::size_t>(pick[1])];
            for (std::size_t i = 0; i < pick.size(); ++i)
                for (std::size_t j = i + 1; j < pick.size(); ++j)
                    if ((h.members[static_cast<std::size_t>(pick[i])] &
                         h.members[static_cast<std::size_t>(pick[j])]) != kernel)
                        return false;
            return true;
        }
        for (std::size_t i = start; i < h.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

SetSystem family_u(std::size_t n, const std::vector<std::vector<int>>& sets) { return make_family(n, sets); }

}  // namespace

TEST_CASE("is_sunflower certificates") {
    SetSystem h = family_u(7, {{1, 2}, {1, 3}, {1, 4}});
    auto s = is_sunflower(h, std::vector<int>{0, 1, 2});
    REQUIRE(s);
    CHECK(s->kernel == Bitset::of(7, {1}));

    SetSystem disj = family_u(7, {{1, 2}, {3, 4}, {5, 6}});
    auto sd = is_sunflower(disj, std::vector<int>{0, 1, 2});
    REQUIRE(sd);
    CHECK(sd->kernel.none());

    SetSystem tri = family_u(4, {{1, 2}, {2, 3}, {1, 3}});
    CHECK_FALSE(is_sunflower(tri, std::vector<int>{0, 1, 2}).has_value());

    auto single = is_sunflower(h, std::vector<int>{1});
    REQUIRE(single);
    CHECK(single->kernel == h.members[1]);  // r = 1 convention

    CHECK_THROWS_AS(is_sunflower(h, std::vector<int>{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(is_sunflower(h, std::vector<int>{5}), std::invalid_argument);
}

TEST_CASE("exact search on the extremal family and its extension") {
    SetSystem tree = tree_family(3, 2);
    CHECK_FALSE(find_sunflower_exact(tree, 3).has_value());
    CHECK(find_sunflower_exact(tree, 2).has_value());  // any two distinct sets

    // Adding a bare root edge creates a sunflower with that kernel.
    SetSystem extended = tree;
    Bitset root_edge(extended.n());
    root_edge.set(0);
    extended.members.push_back(root_edge);
    auto s = find_sunflower_exact(extended, 3);
    REQUIRE(s);
    CHECK(s->kernel == root_edge);
}

TEST_CASE("exact search agrees with the oracle on random families") {
    Rng rng(0xfeed1);
    int present = 0;
    for (int it = 0; it < 300; ++it) {
        std::size_t n = 2 + rng.below(7);
        GeneratorConfig cfg;
        cfg.n = n;
        cfg.ell = n;
        cfg.family_size = 1 + rng.below(std::min<std::size_t>(10, std::size_t(1) << n));
        cfg.seed = rng.next();
        SetSystem h = random_family(cfg);
        for (int r = 2; r <= 4; ++r) {
            auto mine = find_sunflower_exact(h, r);
            bool oracle = oracle_has_sunflower(h, r);
            REQUIRE(mine.has_value() == oracle);
            if (mine) {
                ++present;
                auto valid = is_sunflower(h, mine->members);
                REQUIRE(valid);
                REQUIRE(valid->kernel == mine->kernel);
            }
        }
    }
    CHECK(present > 100);  // the corpus exercises both outcomes
}

TEST_CASE("erdos-rado extractor examples") {
    SetSystem disj = family_u(6, {{0, 1}, {2, 3}, {4, 5}});
    auto s = extract_er(disj, 3);
    REQUIRE(s);
    CHECK(s->kernel.none());

    SetSystem star = family_u(5, {{0, 1}, {0, 2}, {0, 3}});
    auto st = extract_er(star, 3);
    REQUIRE(st);
    CHECK(st->kernel == Bitset::of(5, {0}));

    CHECK_FALSE(extract_er(family_u(3, {{0}, {1}}), 3).has_value());
}

TEST_CASE("erdos-rado guarantee above the factorial bound") {
    // er_bound(3,3) = 48; random 3-bounded families one past it.
    Rng rng(0xfeed2);
    for (int it = 0; it < 25; ++it) {
        GeneratorConfig cfg;
        cfg.n = 10;
        cfg.ell = 3;
        cfg.family_size = 49 + rng.below(20);
        cfg.seed = rng.next();
        SetSystem h = random_family(cfg);
        auto s = extract_er(h, 3);
        REQUIRE(s);
        REQUIRE(is_sunflower(h, s->members).has_value());
    }
}

TEST_CASE("witness recursion on the three-set example") {
    SetSystem h = family_u(2, {{0}, {1}, {0, 1}});
    WitnessOutcome oc = witness_or_sunflower(h, 5);
    auto* w = std::get_if<StructWitness>(&oc);
    REQUIRE(w);
    CHECK(w->x == 0);
    CHECK(w->y == 1);
    CHECK(validate_witness(h, *w));
    CHECK(h.members[static_cast<std::size_t>(w->s_xy)] == Bitset::of(2, {0, 1}));
}

TEST_CASE("witness recursion finds disjoint singletons") {
    SetSystem h = family_u(4, {{0}, {1}, {2}, {3}});
    WitnessOutcome oc = witness_or_sunflower(h, 4);
    auto* s = std::get_if<Sunflower>(&oc);
    REQUIRE(s);
    CHECK(s->members.size() == 4);
    CHECK(s->kernel.none());
}

TEST_CASE("witness recursion never inconclusive above the sharp threshold") {
    Rng rng(0xfeed3);
    for (int it = 0; it < 120; ++it) {
        int r = 3 + static_cast<int>(rng.below(2));
        std::size_t ell = 1 + rng.below(3);
        std::uint64_t threshold = vc1_threshold(static_cast<std::uint64_t>(r), ell).to_u64();
        GeneratorConfig cfg;
        cfg.n = 30 + rng.below(20);
        cfg.ell = ell;
        cfg.family_size = threshold + 1 + rng.below(3);
        cfg.seed = rng.next();
        cfg.kind = FamilyKind::forest_path;
        SetSystem h = random_family(cfg);
        WitnessOutcome oc = witness_or_sunflower(h, r);
        REQUIRE_FALSE(std::holds_alternative<Inconclusive>(oc));
        if (auto* w = std::get_if<StructWitness>(&oc)) REQUIRE(validate_witness(h, *w));
        if (auto* s = std::get_if<Sunflower>(&oc)) REQUIRE(is_sunflower(h, s->members).has_value());
    }
}

TEST_CASE("witness recursion sunflowers imply exact-search presence") {
    Rng rng(0xfeed5);
    for (int it = 0; it < 80; ++it) {
        std::size_t n = 3 + rng.below(5);
        GeneratorConfig cfg;
        cfg.n = n;
        cfg.ell = n;
        cfg.family_size = 1 + rng.below(std::min<std::size_t>(8, (std::size_t(1) << std::min<std::size_t>(n, 3)) - 1));
        cfg.seed = rng.next();
        SetSystem h = random_family(cfg);
        int r = 2 + static_cast<int>(rng.below(2));
        WitnessOutcome oc = witness_or_sunflower(h, r);
        if (auto* s = std::get_if<Sunflower>(&oc)) {
            REQUIRE(is_sunflower(h, s->members).has_value());
            REQUIRE(find_sunflower_exact(h, r).has_value());
        }
        if (auto* w = std::get_if<StructWitness>(&oc)) REQUIRE(validate_witness(h, *w));
    }
}

TEST_CASE("vc1 extraction on the extended tree") {
    // tree_family(3,3) has 8 members; one extra root path pushes it past the
    // sharp threshold and the guaranteed sunflower must appear.
    SetSystem h = tree_family(3, 3);
    Bitset extra(h.n());
    extra.set(0);  // the length-1 root path along edge "0"
    h.members.push_back(extra);
    REQUIRE(h.size() == 9);
    Sunflower s = extract_vc1(h, 3);
    auto valid = is_sunflower(h, s.members);
    REQUIRE(valid);
    CHECK(s.members.size() == 3);
    CHECK(find_sunflower_exact(h, 3).has_value());
}

TEST_CASE("vc1 extraction through the witness branch") {
    // Dimension 1, five members over the threshold (r-1)^ell = 4, and the
    // recursion meets incomparable intersections before any sunflower.
    SetSystem h = make_family(7, {{1, 2}, {2, 4}, {2, 6}, {2, 3}, {1}});
    REQUIRE(vc_dimension(h).dimension == 1);
    WitnessOutcome oc = witness_or_sunflower(h, 3);
    auto* w = std::get_if<StructWitness>(&oc);
    REQUIRE(w);
    CHECK(w->x == 2);
    CHECK(w->y == 1);
    CHECK(validate_witness(h, *w));
    Sunflower s = extract_vc1(h, 3);
    REQUIRE(is_sunflower(h, s.members).has_value());
    CHECK(s.kernel == Bitset::of(7, {2}));
}

TEST_CASE("vc1 extraction with an empty member") {
    // {∅, {1}, {2}} sits above the threshold for r = 3 at ell = 1 and the
    // three sets are pairwise disjoint, empty member included.
    SetSystem h = make_family(3, {{}, {1}, {2}});
    REQUIRE(vc_dimension(h).dimension == 1);
    Sunflower s = extract_vc1(h, 3);
    CHECK(s.members.size() == 3);
    CHECK(s.kernel.none());
    REQUIRE(is_sunflower(h, s.members).has_value());
}

TEST_CASE("vc1 extraction rejects violated hypotheses") {
    SetSystem tree = tree_family(3, 2);
    CHECK_THROWS_AS(extract_vc1(tree, 3), std::domain_error);  // |H| = 4 not > 4

    SetSystem pow = make_family(2, {{}, {0}, {1}, {0, 1}});
    CHECK_THROWS_AS(extract_vc1(pow, 3), std::domain_error);  // VC = 2
}

TEST_CASE("vc1 extraction succeeds on threshold-plus-one forest families") {
    Rng rng(0xfeed4);
    for (int it = 0; it < 60; ++it) {
        int r = 3 + static_cast<int>(rng.below(2));
        std::size_t ell = 1 + rng.below(3);
        std::uint64_t threshold = vc1_threshold(static_cast<std::uint64_t>(r), ell).to_u64();
        GeneratorConfig cfg;
        cfg.n = 40 + rng.below(20);
        cfg.ell = ell;
        cfg.family_size = threshold + 1;
        cfg.seed = rng.next();
        cfg.kind = FamilyKind::forest_path;
        SetSystem h = random_family(cfg);
        Sunflower s = extract_vc1(h, r);
        REQUIRE(is_sunflower(h, s.members).has_value());
        REQUIRE(s.members.size() == static_cast<std::size_t>(r));
        REQUIRE(find_sunflower_exact(h, r).has_value());
    }
}

TEST_CASE("partition search") {
    SetSystem h = family_u(6, {{0}, {1}, {2}, {3}, {4}, {5}});
    auto s = disjoint_via_partition(h, 3, 200, 777);
    REQUIRE(s);
    CHECK(s->kernel.none());
    REQUIRE(is_sunflower(h, s->members).has_value());

    SetSystem tiny = family_u(2, {{0}});
    CHECK_FALSE(disjoint_via_partition(tiny, 2, 50, 1).has_value());

    // Deterministic regression: two disjoints pairs, single trial.
    SetSystem pairs = family_u(4, {{0, 1}, {2, 3}});
    auto fixed = disjoint_via_partition(pairs, 2, 1, 2024);
    auto fixed_again = disjoint_via_partition(pairs, 2, 1, 2024);
    CHECK(fixed.has_value() == fixed_again.has_value());
    if (fixed) CHECK(fixed->members == fixed_again->members);
}

TEST_CASE("tree sharpness across the grid") {
    for (int r : {3, 4})
        for (std::uint64_t ell : {1ull, 2ull, 3ull}) {
            SetSystem h = tree_family(static_cast<std::uint64_t>(r), ell);
            CHECK(BigUint(h.size()) == vc1_threshold(static_cast<std::uint64_t>(r), ell));
            CHECK(vc_dimension(h, h.n()).dimension == 1);
            CHECK_FALSE(find_sunflower_exact(h, r).has_value());
        }
}
