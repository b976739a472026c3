#include "sunflower/verify.hpp"

#include <algorithm>
#include <functional>

#include "sunflower/bounds.hpp"
#include "sunflower/gen.hpp"
#include "sunflower/set_system.hpp"
#include "sunflower/spread.hpp"
#include "sunflower/sunflower.hpp"
#include "sunflower/threshold.hpp"
#include "sunflower/vc.hpp"

namespace sunflower {

namespace {

using Check = std::function<bool(std::string&)>;

PropertyResult run_check(const std::string& name, const Check& check) {
    PropertyResult r;
    r.name = name;
    std::string detail;
    try {
        r.pass = check(detail);
        r.detail = detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

SetSystem sample_family(Rng& rng, std::size_t n, std::size_t max_members) {
    GeneratorConfig cfg;
    cfg.n = n;
    cfg.ell = n;
    std::size_t cap = n < 10 ? std::min<std::size_t>(max_members, std::size_t(1) << n) : max_members;
    cfg.family_size = 1 + rng.below(cap);
    cfg.seed = rng.next();
    cfg.kind = FamilyKind::uniform_random;
    return random_family(cfg);
}

bool naive_has_sunflower(const SetSystem& h, int r) {
    std::vector<int> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == static_cast<std::size_t>(r)) return is_sunflower(h, pick).has_value();
        for (std::size_t i = start; i < h.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

std::vector<PropertyResult> suite_setsystem(std::uint64_t seed) {
    std::vector<PropertyResult> out;
    out.push_back(run_check("trace-idempotent", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 1));
        for (int it = 0; it < 40; ++it) {
            std::size_t n = 2 + rng.below(6);
            SetSystem h = sample_family(rng, n, 8);
            for (std::uint64_t u = 0; u < (std::uint64_t(1) << n); ++u) {
                SetSystem t1 = trace(h, Bitset::from_word(n, u));
                SetSystem t2 = trace(t1, Bitset::full(t1.n()));
                if (t1.ground != t2.ground || t1.members != t2.members) {
                    detail = "failed at iteration " + std::to_string(it);
                    return false;
                }
            }
        }
        return true;
    }));
    out.push_back(run_check("upset-monotone", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 2));
        for (int it = 0; it < 40; ++it) {
            std::size_t n = 2 + rng.below(5);
            SetSystem h = sample_family(rng, n, 8);
            for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a) {
                if (!upset_contains(h, Bitset::from_word(n, a))) continue;
                for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b)
                    if ((b & a) == a && !upset_contains(h, Bitset::from_word(n, b))) {
                        detail = "monotonicity broken";
                        return false;
                    }
            }
        }
        return true;
    }));
    out.push_back(run_check("minimal-antichain-same-upset", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 3));
        for (int it = 0; it < 60; ++it) {
            std::size_t n = 1 + rng.below(7);
            SetSystem h = sample_family(rng, n, 10);
            SetSystem mins = minimal_sets(h);
            for (std::size_t i = 0; i < mins.size(); ++i)
                for (std::size_t j = 0; j < mins.size(); ++j)
                    if (i != j && mins.members[i].subset_of(mins.members[j])) {
                        detail = "not an antichain";
                        return false;
                    }
            for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a) {
                Bitset mask = Bitset::from_word(n, a);
                if (upset_contains(h, mask) != upset_contains(mins, mask)) {
                    detail = "upsets differ at " + mask.to_string();
                    return false;
                }
            }
        }
        return true;
    }));
    out.push_back(run_check("core-is-contained-intersection", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 4));
        for (int it = 0; it < 60; ++it) {
            std::size_t n = 1 + rng.below(7);
            SetSystem h = sample_family(rng, n, 10);
            for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a) {
                Bitset mask = Bitset::from_word(n, a);
                if (!upset_contains(h, mask)) continue;
                Bitset c = core(h, mask);
                if (!c.subset_of(mask)) {
                    detail = "core not contained in its set";
                    return false;
                }
                Bitset brute = Bitset::full(n);
                for (const Bitset& s : h.members)
                    if (s.subset_of(mask)) brute &= s;
                if (c != brute) {
                    detail = "core disagrees with brute-force intersection";
                    return false;
                }
            }
        }
        return true;
    }));
    return out;
}

std::vector<PropertyResult> suite_vc(std::uint64_t seed) {
    std::vector<PropertyResult> out;
    out.push_back(run_check("trace-monotonicity", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 11));
        for (int it = 0; it < 25; ++it) {
            std::size_t n = 2 + rng.below(5);
            SetSystem h = sample_family(rng, n, 12);
            std::size_t d = vc_dimension(h).dimension;
            for (std::uint64_t u = 0; u < (std::uint64_t(1) << n); ++u) {
                SetSystem t = trace(h, Bitset::from_word(n, u));
                if (t.members.empty()) continue;
                if (vc_dimension(t).dimension > d) {
                    detail = "trace has larger dimension";
                    return false;
                }
            }
        }
        return true;
    }));
    out.push_back(run_check("sauer-shelah", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 12));
        for (int it = 0; it < 40; ++it) {
            std::size_t n = 2 + rng.below(6);
            SetSystem h = sample_family(rng, n, 14);
            std::size_t d = vc_dimension(h).dimension;
            if (BigUint(h.size()) > sauer_shelah_bound(n, d)) {
                detail = "family exceeds the bound";
                return false;
            }
            for (std::uint64_t u = 0; u < (std::uint64_t(1) << n); ++u) {
                SetSystem t = trace(h, Bitset::from_word(n, u));
                if (BigUint(t.size()) > sauer_shelah_bound(t.n(), std::min(t.n(), d))) {
                    detail = "trace exceeds the bound";
                    return false;
                }
            }
        }
        return true;
    }));
    out.push_back(run_check("sauer-shelah-closed-form", [&](std::string& detail) {
        // sum C(n,i) <= (e n / d)^d via a rational lower bound on e.
        const Rational e_lo = Rational::parse("2.7182818284");
        for (std::uint64_t n = 1; n <= 30; ++n)
            for (std::uint64_t d = 1; d <= n; ++d) {
                Rational lhs = Rational::from_uint(sauer_shelah_bound(n, d));
                Rational rhs = (e_lo * Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d))).pow(d);
                if (lhs > rhs) {
                    detail = "closed form fails at n=" + std::to_string(n) + " d=" + std::to_string(d);
                    return false;
                }
            }
        return true;
    }));
    out.push_back(run_check("shatters-definition", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 13));
        for (int it = 0; it < 200; ++it) {
            std::size_t n = 1 + rng.below(7);
            SetSystem h = sample_family(rng, n, 10);
            Bitset t = Bitset::from_word(n, rng.below(std::uint64_t(1) << n));
            bool expect = true;
            std::vector<int> pos = t.elements();
            for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << pos.size()) && expect; ++sub) {
                Bitset target(n);
                for (std::size_t j = 0; j < pos.size(); ++j)
                    if (sub & (std::uint64_t(1) << j)) target.set(static_cast<std::size_t>(pos[j]));
                bool realized = false;
                for (const Bitset& s : h.members)
                    if ((s & t) == target) {
                        realized = true;
                        break;
                    }
                expect = realized;
            }
            if (shatters(h, t) != expect) {
                detail = "shatters disagrees with definition";
                return false;
            }
        }
        return true;
    }));
    return out;
}

std::vector<PropertyResult> suite_bounds(std::uint64_t seed) {
    (void)seed;
    std::vector<PropertyResult> out;
    out.push_back(run_check("logstar-intervals", [&](std::string& detail) {
        const std::pair<std::uint64_t, std::uint64_t> pins[] = {
            {1, 1}, {2, 3}, {3, 4}, {4, 5}, {8, 6}, {9, 7}, {16, 7}, {17, 8}, {100, 8},
            {256, 8}, {257, 9}, {300, 9}, {65536, 9}, {65537, 10},
        };
        for (auto [x, twice] : pins)
            if (log_star_smoothed(x).twice() != twice) {
                detail = "wrong value at x=" + std::to_string(x);
                return false;
            }
        return true;
    }));
    out.push_back(run_check("logstar-shift-identity", [&](std::string& detail) {
        for (std::uint64_t x = 1; x <= (1u << 16); ++x) {
            HalfInt lhs = x < 64 ? log_star_smoothed(std::uint64_t(1) << x) : log_star_smoothed(BigUint::pow2(x));
            if (lhs != log_star_smoothed(x).plus_whole(1)) {
                detail = "identity fails at x=" + std::to_string(x);
                return false;
            }
        }
        return true;
    }));
    out.push_back(run_check("logstar-claim-square-vs-power", [&](std::string& detail) {
        for (std::uint64_t x = 9; x <= (1u << 16); ++x) {
            HalfInt lhs = log_star_smoothed(x * x).plus_half();
            HalfInt rhs = x < 64 ? log_star_smoothed(std::uint64_t(1) << x) : log_star_smoothed(BigUint::pow2(x));
            if (!(lhs <= rhs)) {
                detail = "claim fails at x=" + std::to_string(x);
                return false;
            }
        }
        return true;
    }));
    out.push_back(run_check("logstar-monotone", [&](std::string& detail) {
        HalfInt prev = log_star_smoothed(std::uint64_t(1));
        for (std::uint64_t x = 2; x <= (1u << 20); ++x) {
            HalfInt cur = log_star_smoothed(x);
            if (cur < prev) {
                detail = "not monotone at x=" + std::to_string(x);
                return false;
            }
            prev = cur;
        }
        return true;
    }));
    out.push_back(run_check("lambda-monotone-in-ell", [&](std::string& detail) {
        for (std::uint64_t d : {1ull, 2ull, 3ull, 5ull, 8ull}) {
            HalfInt prev = lambda_d(d, 1);
            for (std::uint64_t ell = 2; ell <= 5000; ++ell) {
                HalfInt cur = lambda_d(d, ell);
                if (cur < prev) {
                    detail = "lambda decreases at d=" + std::to_string(d) + " ell=" + std::to_string(ell);
                    return false;
                }
                prev = cur;
            }
        }
        return true;
    }));
    return out;
}

std::vector<PropertyResult> suite_sunflower(std::uint64_t seed) {
    std::vector<PropertyResult> out;
    out.push_back(run_check("exact-search-matches-naive", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 21));
        for (int it = 0; it < 120; ++it) {
            std::size_t n = 2 + rng.below(6);
            SetSystem h = sample_family(rng, n, 9);
            int r = 2 + static_cast<int>(rng.below(2));
            auto found = find_sunflower_exact(h, r);
            if (found.has_value() != naive_has_sunflower(h, r)) {
                detail = "presence disagrees with naive enumeration";
                return false;
            }
            if (found && !is_sunflower(h, found->members)) {
                detail = "returned certificate invalid";
                return false;
            }
        }
        return true;
    }));
    out.push_back(run_check("er-extractor", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 22));
        for (int it = 0; it < 10; ++it) {
            GeneratorConfig cfg;
            cfg.n = 14;
            cfg.ell = 2;
            cfg.family_size = 9;  // > er_bound(3,2) = 8
            cfg.seed = rng.next();
            SetSystem h = random_family(cfg);
            auto found = extract_er(h, 3);
            if (!found || !is_sunflower(h, found->members)) {
                detail = "extractor failed above the Erdos–Rado bound";
                return false;
            }
        }
        return true;
    }));
    out.push_back(run_check("witness-trichotomy", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 23));
        for (int it = 0; it < 30; ++it) {
            GeneratorConfig cfg;
            cfg.n = 20;
            cfg.ell = 3;
            cfg.family_size = 9;  // > (3-1)^3
            cfg.seed = rng.next();
            cfg.kind = FamilyKind::forest_path;
            SetSystem h = random_family(cfg);
            WitnessOutcome oc = witness_or_sunflower(h, 3);
            if (std::holds_alternative<Inconclusive>(oc)) {
                detail = "inconclusive above the threshold";
                return false;
            }
            if (auto* w = std::get_if<StructWitness>(&oc); w && !validate_witness(h, *w)) {
                detail = "witness fails its trace equalities";
                return false;
            }
            if (auto* s = std::get_if<Sunflower>(&oc); s && !is_sunflower(h, s->members)) {
                detail = "sunflower certificate invalid";
                return false;
            }
        }
        return true;
    }));
    out.push_back(run_check("tree-sharpness-small", [&](std::string& detail) {
        for (int r : {3, 4})
            for (std::uint64_t ell : {1ull, 2ull}) {
                SetSystem h = tree_family(static_cast<std::uint64_t>(r), ell);
                if (BigUint(h.size()) != vc1_threshold(static_cast<std::uint64_t>(r), ell)) {
                    detail = "member count off";
                    return false;
                }
                if (vc_dimension(h, h.n()).dimension != 1) {
                    detail = "tree family dimension != 1";
                    return false;
                }
                if (find_sunflower_exact(h, r)) {
                    detail = "unexpected sunflower in the extremal family";
                    return false;
                }
            }
        return true;
    }));
    out.push_back(run_check("partition-disjoint-search", [&](std::string& detail) {
        SetSystem h = make_family(6, {{0}, {1}, {2}, {3}, {4}, {5}});
        auto found = disjoint_via_partition(h, 3, 200, 12345);
        if (!found || !found->kernel.none()) {
            detail = "failed on six disjoint singletons";
            return false;
        }
        return true;
    }));
    return out;
}

std::vector<PropertyResult> suite_spread(std::uint64_t seed) {
    std::vector<PropertyResult> out;
    out.push_back(run_check("core-lemma", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 31));
        for (int it = 0; it < 30; ++it) {
            std::size_t n = 2 + rng.below(5);
            SetSystem h = sample_family(rng, n, 8);
            for (std::uint64_t wm = 0; wm < (std::uint64_t(1) << n); ++wm) {
                Bitset w = Bitset::from_word(n, wm);
                for (const Bitset& f : reduced_family(h, w).members) {
                    if (!upset_contains(h, w | f)) {
                        detail = "W ∪ F escapes the upset";
                        return false;
                    }
                    if (!f.subset_of(core(h, w | f))) {
                        detail = "F not inside the core";
                        return false;
                    }
                }
            }
        }
        return true;
    }));
    out.push_back(run_check("decomposition-invariants", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 32));
        for (int it = 0; it < 25; ++it) {
            std::size_t n = 2 + rng.below(4);
            SetSystem h = sample_family(rng, n, 8);
            std::size_t ell = h.ell();
            std::size_t d = vc_dimension(h).dimension;
            for (std::uint64_t wm = 0; wm < (std::uint64_t(1) << n); ++wm) {
                Bitset w = Bitset::from_word(n, wm);
                for (std::size_t t = 0; t <= ell + 1; ++t)
                    for (auto kind : {ChooserKind::lexicographic, ChooserKind::seeded_random}) {
                        SpreadDecomposition dec = decompose(h, w, t, ChooserRule{kind, rng.next()});
                        SetSystem reduced = reduced_family(h, w);
                        SetSystem joint = reduced;  // small ∪ large on the same ground
                        joint.members.clear();
                        for (const Bitset& f : dec.small.members) joint.members.push_back(f);
                        for (const Bitset& f : dec.large.members)
                            if (!joint.has_member(f)) joint.members.push_back(f);
                        for (std::size_t i = 0; i < h.size(); ++i) {
                            const Bitset& s = h.members[i];
                            const Bitset& f = dec.chosen[i];
                            const Bitset& fstar = dec.f_star[i];
                            if (!reduced.has_member(f) || !f.subset_of(s.minus(w))) {
                                detail = "chosen representative invalid";
                                return false;
                            }
                            if (!f.subset_of(fstar) || !fstar.subset_of(s) || fstar.minus(w) != f) {
                                detail = "inclusion chain broken";
                                return false;
                            }
                            if (!upset_contains(joint, s)) {
                                detail = "family escapes ⟨small ∪ large⟩";
                                return false;
                            }
                        }
                        for (const Bitset& f : dec.small.members)
                            if (t == 0 || f.count() > t - 1) {
                                detail = "small family not (t-1)-bounded";
                                return false;
                            }
                        for (const Bitset& f : dec.large.members)
                            if (f.minus(w).count() < t) {
                                detail = "large member with short residual";
                                return false;
                            }
                        if (!dec.small.members.empty() && vc_dimension(dec.small).dimension > d) {
                            detail = "small family dimension grew";
                            return false;
                        }
                        for (std::uint64_t wp = 0; wp < (std::uint64_t(1) << n); ++wp) {
                            Bitset wprime = Bitset::from_word(n, wp);
                            if (upset_contains(dec.small, wprime) && !upset_contains(h, w | wprime)) {
                                detail = "W ∪ W' escapes ⟨H⟩";
                                return false;
                            }
                        }
                    }
            }
        }
        return true;
    }));
    out.push_back(run_check("counting-bound", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 33));
        const Rational qs[] = {Rational(1, 8), Rational(1, 4), Rational(1, 3)};
        for (int it = 0; it < 12; ++it) {
            std::size_t n = 3 + rng.below(5);
            SetSystem h = sample_family(rng, n, 8);
            std::size_t d = std::max<std::size_t>(1, vc_dimension(h).dimension);
            std::size_t ell = std::max({h.ell(), d, std::size_t(1)});
            Rational q = qs[rng.below(3)];
            Rational p = Rational(2) * q * Rational(1 + static_cast<std::int64_t>(rng.below(2)));
            if (p > Rational(1)) p = Rational(1);
            for (std::size_t t = 0; t <= ell; ++t)
                for (auto kind : {ChooserKind::lexicographic, ChooserKind::seeded_random}) {
                    Rational lhs = expectation_large_weight_exact(h, p, q, t, ChooserRule{kind, rng.next()});
                    Rational rhs = count_bound(ell, d, q, p, t);
                    if (lhs > rhs) {
                        detail = "expectation exceeds the bound";
                        return false;
                    }
                }
        }
        return true;
    }));
    out.push_back(run_check("counting-bound-vc1", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 34));
        int checked = 0;
        for (int it = 0; it < 40 && checked < 8; ++it) {
            GeneratorConfig cfg;
            cfg.n = 9;
            cfg.ell = 3;
            cfg.family_size = 4 + rng.below(3);
            cfg.seed = rng.next();
            cfg.kind = FamilyKind::forest_path;
            SetSystem h = random_family(cfg);
            // Refinement hypothesis: every pair of elements is avoided by some member.
            bool hyp = true;
            for (std::size_t x = 0; x < h.n() && hyp; ++x)
                for (std::size_t y = x + 1; y < h.n() && hyp; ++y) {
                    bool avoided = false;
                    for (const Bitset& s : h.members)
                        if (!s.test(x) && !s.test(y)) {
                            avoided = true;
                            break;
                        }
                    hyp = avoided;
                }
            if (!hyp) continue;
            ++checked;
            Rational q(1, 4), p(1, 2);
            for (std::size_t t = 0; t <= h.ell(); ++t) {
                Rational lhs = expectation_large_weight_exact(h, p, q, t);
                if (lhs > count_bound_vc1(q, p, t)) {
                    detail = "vc1 expectation exceeds the bound";
                    return false;
                }
            }
        }
        if (checked == 0) {
            detail = "no instance satisfied the hypothesis";
            return false;
        }
        return true;
    }));
    return out;
}

std::vector<PropertyResult> suite_threshold(std::uint64_t seed) {
    std::vector<PropertyResult> out;
    out.push_back(run_check("prob-monotone-in-p", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 41));
        for (int it = 0; it < 25; ++it) {
            std::size_t n = 2 + rng.below(6);
            SetSystem h = sample_family(rng, n, 8);
            Rational prev(0);
            for (int k = 0; k <= 8; ++k) {
                Rational prob = prob_upset_exact(h, Rational(k, 8));
                if (prob < prev) {
                    detail = "probability decreased in p";
                    return false;
                }
                prev = prob;
            }
        }
        return true;
    }));
    out.push_back(run_check("prob-matches-direct-sum", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 42));
        for (int it = 0; it < 20; ++it) {
            std::size_t n = 1 + rng.below(6);
            SetSystem h = sample_family(rng, n, 8);
            Rational p(static_cast<std::int64_t>(rng.below(5)), 4);
            if (p > Rational(1)) p = Rational(1);
            Rational direct(0);
            for (std::uint64_t wm = 0; wm < (std::uint64_t(1) << n); ++wm) {
                Bitset w = Bitset::from_word(n, wm);
                if (!upset_contains(h, w)) continue;
                Rational term(1);
                for (std::size_t e = 0; e < n; ++e) term = term * (w.test(e) ? p : Rational(1) - p);
                direct = direct + term;
            }
            if (direct != prob_upset_exact(h, p)) {
                detail = "exact probability disagrees with the direct sum";
                return false;
            }
        }
        return true;
    }));
    out.push_back(run_check("cover-certificates", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 43));
        for (int it = 0; it < 30; ++it) {
            std::size_t n = 2 + rng.below(5);
            SetSystem h = sample_family(rng, n, 7);
            Rational q(static_cast<std::int64_t>(rng.below(5)), 4);
            if (q > Rational(1)) q = Rational(1);
            auto [weight, cert] = min_cover_weight(h, q);
            if (!cover_is_valid(h, cert)) {
                detail = "certificate invalid";
                return false;
            }
            Rational trivial(0);
            for (const Bitset& s : h.members) trivial = trivial + q.pow(s.count());
            Rational cap = trivial < Rational(1) ? trivial : Rational(1);
            if (weight > cap) {
                detail = "weight above the trivial covers";
                return false;
            }
        }
        return true;
    }));
    out.push_back(run_check("kk-bell-dichotomy", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 44));
        const Rational eps_grid[] = {Rational(1, 2), Rational(1, 4), Rational(1, 8)};
        const Rational q_grid[] = {Rational(1, 64), Rational(1, 16), Rational(1, 4), Rational(1, 2), Rational(1)};
        for (int it = 0; it < 40; ++it) {
            std::size_t n = 2 + rng.below(6);
            SetSystem h = sample_family(rng, n, 8);
            DichotomyReport rep =
                kk_dichotomy(h, q_grid[rng.below(5)], eps_grid[rng.below(3)], KkVariant::kk_bell);
            if (!rep.branch1_holds && !rep.branch2_holds) {
                detail = "dichotomy violated";
                return false;
            }
        }
        return true;
    }));
    out.push_back(run_check("mc-brackets-exact", [&](std::string& detail) {
        SetSystem h = make_family(4, {{0}, {1, 2}});
        Rational p(1, 2);
        Rational exact = prob_upset_exact(h, p);
        McEstimate est = prob_upset_mc(h, p, 40000, Rng::mix(seed, 45));
        double diff = est.estimate - exact.to_double();
        if (diff < 0) diff = -diff;
        if (diff > est.half_width + 0.01) {
            detail = "estimate far from the exact value";
            return false;
        }
        return true;
    }));
    return out;
}

std::vector<PropertyResult> suite_gen(std::uint64_t seed) {
    std::vector<PropertyResult> out;
    out.push_back(run_check("tree-family-shape", [&](std::string& detail) {
        for (std::uint64_t r : {2ull, 3ull, 4ull})
            for (std::uint64_t ell : {1ull, 2ull, 3ull}) {
                SetSystem h = tree_family(r, ell);
                if (BigUint(h.size()) != BigUint::pow(r - 1, ell)) {
                    detail = "leaf count off";
                    return false;
                }
                for (const Bitset& s : h.members)
                    if (s.count() != ell) {
                        detail = "path of wrong length";
                        return false;
                    }
            }
        return true;
    }));
    out.push_back(run_check("padding-round-trip", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 51));
        for (int it = 0; it < 40; ++it) {
            std::size_t n = 2 + rng.below(5);
            SetSystem h = sample_family(rng, n, 8);
            std::size_t ell = h.ell() + rng.below(3);
            PaddedFamily pf = pad_to_uniform(h, ell);
            if (pf.padded.size() != h.size()) {
                detail = "member count changed";
                return false;
            }
            for (std::size_t i = 0; i < h.size(); ++i) {
                if (pf.padded.members[i].count() != ell) {
                    detail = "padded member not uniform";
                    return false;
                }
                if (pf.strip(pf.padded.members[i]) != h.members[i]) {
                    detail = "strip does not invert padding";
                    return false;
                }
            }
            for (int r : {2, 3}) {
                auto sf = find_sunflower_exact(pf.padded, r);
                if (sf && sf->kernel.last() >= static_cast<int>(h.n())) {
                    detail = "kernel contains a padding element";
                    return false;
                }
                if (sf) {
                    auto orig = is_sunflower(h, sf->members);
                    if (!orig) {
                        detail = "padded sunflower does not map back";
                        return false;
                    }
                }
            }
        }
        return true;
    }));
    out.push_back(run_check("generators-deterministic", [&](std::string& detail) {
        for (auto kind : {FamilyKind::uniform_random, FamilyKind::forest_path, FamilyKind::rejection_vc1}) {
            GeneratorConfig cfg;
            cfg.n = 10;
            cfg.ell = 3;
            cfg.family_size = 5;
            cfg.seed = Rng::mix(seed, 52);
            cfg.kind = kind;
            SetSystem a = random_family(cfg);
            SetSystem b = random_family(cfg);
            if (a.ground != b.ground || a.members != b.members) {
                detail = "same config produced different families";
                return false;
            }
        }
        return true;
    }));
    out.push_back(run_check("forest-path-low-dimension", [&](std::string& detail) {
        Rng rng(Rng::mix(seed, 53));
        for (int it = 0; it < 20; ++it) {
            GeneratorConfig cfg;
            cfg.n = 12;
            cfg.ell = 4;
            cfg.family_size = 6;
            cfg.seed = rng.next();
            cfg.kind = FamilyKind::forest_path;
            SetSystem h = random_family(cfg);
            if (vc_dimension(h, h.n()).dimension > 1) {
                detail = "forest-path family with dimension above 1";
                return false;
            }
        }
        return true;
    }));
    return out;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"setsystem", "vc", "bounds", "sunflower", "spread", "threshold", "gen"};
}

std::vector<PropertyResult> run_verify_suite(const std::string& name, std::uint64_t seed) {
    if (name == "setsystem") return suite_setsystem(seed);
    if (name == "vc") return suite_vc(seed);
    if (name == "bounds") return suite_bounds(seed);
    if (name == "sunflower") return suite_sunflower(seed);
    if (name == "spread") return suite_spread(seed);
    if (name == "threshold") return suite_threshold(seed);
    if (name == "gen") return suite_gen(seed);
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace sunflower
