#include "sunflower/sunflower.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "sunflower/bounds.hpp"
#include "sunflower/gen.hpp"
#include "sunflower/vc.hpp"

namespace sunflower {

std::optional<Sunflower> is_sunflower(const SetSystem& h, std::span<const int> members) {
    std::unordered_set<int> dup(members.begin(), members.end());
    if (dup.size() != members.size()) throw std::invalid_argument("is_sunflower: duplicate member indices");
    for (int i : members)
        if (i < 0 || static_cast<std::size_t>(i) >= h.size())
            throw std::invalid_argument("is_sunflower: member index out of range");
    if (members.empty()) return std::nullopt;

    Sunflower s;
    s.members.assign(members.begin(), members.end());
    if (members.size() == 1) {
        s.kernel = h.members[static_cast<std::size_t>(members[0])];
        return s;
    }
    Bitset kernel = h.members[static_cast<std::size_t>(members[0])] & h.members[static_cast<std::size_t>(members[1])];
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            Bitset inter = h.members[static_cast<std::size_t>(members[i])] & h.members[static_cast<std::size_t>(members[j])];
            if (inter != kernel) return std::nullopt;
        }
    s.kernel = std::move(kernel);
    return s;
}

bool validate_witness(const SetSystem& h, const StructWitness& w) {
    if (w.x == w.y) return false;
    auto in_range_elem = [&](int e) { return e >= 0 && static_cast<std::size_t>(e) < h.n(); };
    auto in_range_mem = [&](int m) { return m >= 0 && static_cast<std::size_t>(m) < h.size(); };
    if (!in_range_elem(w.x) || !in_range_elem(w.y)) return false;
    if (!in_range_mem(w.s_x) || !in_range_mem(w.s_y) || !in_range_mem(w.s_xy)) return false;
    const Bitset& sx = h.members[static_cast<std::size_t>(w.s_x)];
    const Bitset& sy = h.members[static_cast<std::size_t>(w.s_y)];
    const Bitset& sxy = h.members[static_cast<std::size_t>(w.s_xy)];
    std::size_t x = static_cast<std::size_t>(w.x), y = static_cast<std::size_t>(w.y);
    return sx.test(x) && !sx.test(y) && !sy.test(x) && sy.test(y) && sxy.test(x) && sxy.test(y);
}

namespace {

// Greedy packing in list order; returns chosen positions.  The sets must be
// compatible with `used` (already filtered).
std::vector<std::size_t> greedy_disjoint(const std::vector<Bitset>& sets, const std::vector<std::size_t>& avail) {
    std::vector<std::size_t> chosen;
    if (avail.empty()) return chosen;
    Bitset used(sets[avail[0]].universe_size());
    for (std::size_t idx : avail) {
        if (!sets[idx].intersects(used)) {
            chosen.push_back(idx);
            used |= sets[idx];
        }
    }
    return chosen;
}

// Upper bound on the size of a pairwise-disjoint subfamily: sets sharing an
// element pairwise intersect, so a greedy cover by most-common elements
// bounds any packing by the number of groups.  Stops at `cap`.
std::size_t packing_upper_bound(const std::vector<Bitset>& sets, std::vector<std::size_t> avail, std::size_t cap) {
    if (avail.empty()) return 0;
    std::size_t nbits = sets[avail[0]].universe_size();
    std::size_t groups = 0;
    while (!avail.empty() && groups < cap) {
        // Empty sets pairwise intersect with nothing: each is its own group.
        std::size_t best_elem = nbits;
        std::size_t best_count = 0;
        std::vector<std::size_t> count(nbits, 0);
        for (std::size_t idx : avail)
            for (int e : sets[idx].elements())
                if (++count[static_cast<std::size_t>(e)] > best_count) {
                    best_count = count[static_cast<std::size_t>(e)];
                    best_elem = static_cast<std::size_t>(e);
                }
        if (best_count <= 1) {
            groups += avail.size();  // pairwise disjoint from here on is possible
            break;
        }
        ++groups;
        std::vector<std::size_t> next;
        next.reserve(avail.size() - best_count);
        for (std::size_t idx : avail)
            if (!sets[idx].test(best_elem)) next.push_back(idx);
        avail = std::move(next);
    }
    return groups;
}

// Exact search for r pairwise-disjoint sets among `petals`; returns chosen
// positions or nullopt.  Deterministic DFS in list order with a greedy
// completion shortcut and the group upper bound for pruning.
bool pack_exactly(const std::vector<Bitset>& petals, std::size_t r, std::vector<std::size_t>& avail,
                  std::vector<std::size_t>& chosen) {
    if (chosen.size() >= r) return true;
    std::size_t need = r - chosen.size();
    if (avail.size() < need) return false;

    std::vector<std::size_t> greedy = greedy_disjoint(petals, avail);
    if (greedy.size() >= need) {
        chosen.insert(chosen.end(), greedy.begin(), greedy.begin() + static_cast<std::ptrdiff_t>(need));
        return true;
    }
    if (packing_upper_bound(petals, avail, need) < need) return false;

    // Branch on the first available petal: take it or drop it.
    std::size_t head = avail[0];
    std::vector<std::size_t> with;
    with.reserve(avail.size());
    for (std::size_t idx : avail)
        if (idx != head && !petals[idx].intersects(petals[head])) with.push_back(idx);
    chosen.push_back(head);
    if (pack_exactly(petals, r, with, chosen)) return true;
    chosen.pop_back();

    std::vector<std::size_t> without(avail.begin() + 1, avail.end());
    return pack_exactly(petals, r, without, chosen);
}

}  // namespace

std::optional<Sunflower> find_sunflower_exact(const SetSystem& h, int r) {
    if (r < 1) throw std::invalid_argument("find_sunflower_exact requires r >= 1");
    std::size_t rr = static_cast<std::size_t>(r);
    if (h.size() < rr) return std::nullopt;
    if (rr == 1) return is_sunflower(h, std::vector<int>{0});

    // Kernel candidates: the empty set plus all pairwise intersections, in
    // first-appearance order of the generating pairs.
    std::vector<Bitset> kernels;
    std::unordered_set<Bitset, BitsetHash> seen;
    Bitset empty(h.n());
    kernels.push_back(empty);
    seen.insert(empty);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            Bitset inter = h.members[i] & h.members[j];
            if (seen.insert(inter).second) kernels.push_back(std::move(inter));
        }

    for (const Bitset& kernel : kernels) {
        std::vector<Bitset> petals;
        std::vector<int> owners;
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (!kernel.subset_of(h.members[i])) continue;
            petals.push_back(h.members[i].minus(kernel));
            owners.push_back(static_cast<int>(i));
        }
        if (petals.size() < rr) continue;
        std::vector<std::size_t> avail(petals.size());
        for (std::size_t i = 0; i < petals.size(); ++i) avail[i] = i;
        std::vector<std::size_t> chosen;
        if (pack_exactly(petals, rr, avail, chosen)) {
            std::vector<int> members;
            members.reserve(rr);
            for (std::size_t pos : chosen) members.push_back(owners[pos]);
            std::sort(members.begin(), members.end());
            auto cert = is_sunflower(h, members);
            assert(cert.has_value());
            return cert;
        }
    }
    return std::nullopt;
}

namespace {

std::optional<std::vector<int>> extract_er_rec(const std::vector<Bitset>& members, const std::vector<int>& tags,
                                               std::size_t r) {
    if (members.size() < r) return std::nullopt;
    std::vector<std::size_t> avail(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) avail[i] = i;
    std::vector<std::size_t> disjoint = greedy_disjoint(members, avail);
    if (disjoint.size() >= r) {
        std::vector<int> out;
        for (std::size_t i = 0; i < r; ++i) out.push_back(tags[disjoint[i]]);
        return out;
    }

    // Most popular element, least index among ties.
    std::size_t nbits = members[0].universe_size();
    std::vector<std::size_t> count(nbits, 0);
    for (const Bitset& s : members)
        for (int e : s.elements()) ++count[static_cast<std::size_t>(e)];
    std::size_t best = nbits, best_count = 0;
    for (std::size_t e = 0; e < nbits; ++e)
        if (count[e] > best_count) {
            best_count = count[e];
            best = e;
        }
    if (best == nbits) return std::nullopt;  // all members empty

    std::vector<Bitset> link;
    std::vector<int> link_tags;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].test(best)) {
            Bitset rest = members[i];
            rest.reset(best);
            link.push_back(std::move(rest));
            link_tags.push_back(tags[i]);
        }
    return extract_er_rec(link, link_tags, r);
}

}  // namespace

std::optional<Sunflower> extract_er(const SetSystem& h, int r) {
    if (r < 1) throw std::invalid_argument("extract_er requires r >= 1");
    std::vector<int> tags(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) tags[i] = static_cast<int>(i);
    auto found = extract_er_rec(h.members, tags, static_cast<std::size_t>(r));
    if (!found) return std::nullopt;
    std::sort(found->begin(), found->end());
    auto cert = is_sunflower(h, *found);
    assert(cert.has_value());
    return cert;
}

namespace {

struct WitnessRec {
    // Outcome carried back up the recursion: either r member tags forming a
    // sunflower, a witness, or nothing.
    std::optional<std::vector<int>> sunflower_tags;
    std::optional<StructWitness> witness;
};

WitnessRec witness_rec(const std::vector<Bitset>& members, const std::vector<int>& tags, std::size_t r) {
    WitnessRec out;
    std::vector<std::size_t> avail(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) avail[i] = i;
    std::vector<std::size_t> disjoint = greedy_disjoint(members, avail);
    if (disjoint.size() >= r) {
        std::vector<int> chosen;
        for (std::size_t i = 0; i < r; ++i) chosen.push_back(tags[disjoint[i]]);
        out.sunflower_tags = std::move(chosen);
        return out;
    }

    // Pick the disjoint-sequence member meeting the most others.
    std::size_t best_i = members.size(), best_count = 0;
    for (std::size_t d : disjoint) {
        std::size_t c = 0;
        for (const Bitset& f : members)
            if (f.intersects(members[d])) ++c;
        if (c > best_count) {
            best_count = c;
            best_i = d;
        }
    }
    if (best_i == members.size()) return out;  // only empty members: bottom out

    const Bitset& pivot = members[best_i];
    std::vector<std::size_t> hit;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].intersects(pivot)) hit.push_back(i);

    // Intersections with the pivot: either two are incomparable (witness) or
    // they form a chain whose minimum gets stripped.
    std::vector<Bitset> inters;
    inters.reserve(hit.size());
    for (std::size_t i : hit) inters.push_back(members[i] & pivot);
    for (std::size_t a = 0; a < inters.size(); ++a)
        for (std::size_t b = a + 1; b < inters.size(); ++b) {
            if (inters[a].subset_of(inters[b]) || inters[b].subset_of(inters[a])) continue;
            Bitset only_a = inters[a].minus(inters[b]);
            Bitset only_b = inters[b].minus(inters[a]);
            StructWitness w;
            w.x = only_a.first();
            w.y = only_b.first();
            w.s_x = tags[hit[a]];
            w.s_y = tags[hit[b]];
            w.s_xy = tags[best_i];
            out.witness = w;
            return out;
        }

    Bitset chain_min = inters[0];
    for (const Bitset& e : inters) chain_min &= e;  // chain minimum
    if (chain_min.none()) return out;               // bottom out

    std::vector<Bitset> stripped;
    std::vector<int> sub_tags;
    stripped.reserve(hit.size());
    for (std::size_t i : hit) {
        stripped.push_back(members[i].minus(chain_min));
        sub_tags.push_back(tags[i]);
    }
    return witness_rec(stripped, sub_tags, r);
}

}  // namespace

WitnessOutcome witness_or_sunflower(const SetSystem& h, int r) {
    if (r < 2) throw std::invalid_argument("witness_or_sunflower requires r >= 2");
    if (h.members.empty()) return Inconclusive{};

    PaddedFamily padded = pad_to_uniform(h, h.ell());

    // Maximal disjoint sequences are built greedily with larger original
    // members first (ties by index); sizes are uniform after padding, so the
    // pre-padding cardinality drives the order.
    std::vector<std::size_t> order(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return h.members[a].count() > h.members[b].count(); });

    std::vector<Bitset> members;
    std::vector<int> tags;
    members.reserve(h.size());
    for (std::size_t i : order) {
        members.push_back(padded.padded.members[i]);
        tags.push_back(static_cast<int>(i));
    }

    WitnessRec rec = witness_rec(members, tags, static_cast<std::size_t>(r));
    if (rec.witness) {
        // Witness elements come from intersections of distinct members, so
        // they are never padding.
        assert(static_cast<std::size_t>(rec.witness->x) < h.n() && static_cast<std::size_t>(rec.witness->y) < h.n());
        assert(validate_witness(h, *rec.witness));
        return *rec.witness;
    }
    if (rec.sunflower_tags) {
        std::sort(rec.sunflower_tags->begin(), rec.sunflower_tags->end());
        auto cert = is_sunflower(h, *rec.sunflower_tags);
        assert(cert.has_value());
        return *cert;
    }
    return Inconclusive{};
}

namespace {

std::vector<int> extract_vc1_rec(const SetSystem& h, int r) {
    std::size_t ell = h.ell();
    if (BigUint(h.size()) <= vc1_threshold(static_cast<std::uint64_t>(r), ell))
        throw std::domain_error("extract_vc1: |H| must exceed (r-1)^ell (hypothesis lost at ell = " +
                                std::to_string(ell) + ")");

    WitnessOutcome outcome = witness_or_sunflower(h, r);
    if (std::holds_alternative<Sunflower>(outcome)) return std::get<Sunflower>(outcome).members;
    if (std::holds_alternative<Inconclusive>(outcome))
        throw std::logic_error("extract_vc1: recursion bottomed out despite |H| > (r-1)^ell");

    const StructWitness& w = std::get<StructWitness>(outcome);
    // VC <= 1 forces every member to meet {x,y}: the traces {x}, {y}, {x,y}
    // are realized, so an untouched member would shatter the pair.
    std::size_t x = static_cast<std::size_t>(w.x), y = static_cast<std::size_t>(w.y);
    std::size_t count_x = 0, count_y = 0;
    for (const Bitset& s : h.members) {
        bool hx = s.test(x), hy = s.test(y);
        if (!hx && !hy)
            throw std::domain_error("extract_vc1: VC-dimension >= 2 detected (pair {" + h.ground[x] + "," +
                                    h.ground[y] + "} is shattered)");
        count_x += hx;
        count_y += hy;
    }
    std::size_t z = count_x >= count_y ? x : y;

    SetSystem sub;
    sub.ground = h.ground;
    std::vector<int> sub_to_orig;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!h.members[i].test(z)) continue;
        Bitset rest = h.members[i];
        rest.reset(z);
        sub.members.push_back(std::move(rest));
        sub_to_orig.push_back(static_cast<int>(i));
    }
    std::vector<int> sub_members = extract_vc1_rec(sub, r);
    std::vector<int> out;
    out.reserve(sub_members.size());
    for (int m : sub_members) out.push_back(sub_to_orig[static_cast<std::size_t>(m)]);
    return out;
}

}  // namespace

Sunflower extract_vc1(const SetSystem& h, int r) {
    if (r < 1) throw std::invalid_argument("extract_vc1 requires r >= 1");
    std::size_t rr = static_cast<std::size_t>(r);
    if (BigUint(h.size()) <= vc1_threshold(static_cast<std::uint64_t>(r), h.ell()))
        throw std::domain_error("extract_vc1: |H| = " + std::to_string(h.size()) + " is not above (r-1)^ell = " +
                                vc1_threshold(static_cast<std::uint64_t>(r), h.ell()).to_decimal());
    {
        ShatterReport d = vc_dimension(h, std::max<std::size_t>(h.n(), 1));
        if (d.dimension > 1)
            throw std::domain_error("extract_vc1: VC-dimension is " + std::to_string(d.dimension) +
                                    ", hypothesis requires <= 1");
    }
    if (rr <= 2) {
        std::vector<int> members;
        for (std::size_t i = 0; i < rr; ++i) members.push_back(static_cast<int>(i));
        return *is_sunflower(h, members);
    }
    std::vector<int> members = extract_vc1_rec(h, r);
    std::sort(members.begin(), members.end());
    auto cert = is_sunflower(h, members);
    if (!cert) throw std::logic_error("extract_vc1: extraction produced a non-sunflower");
    return *cert;
}

std::optional<Sunflower> disjoint_via_partition(const SetSystem& h, int r, int trials, std::uint64_t seed) {
    if (r < 1 || trials < 1) throw std::invalid_argument("disjoint_via_partition requires r >= 1 and trials >= 1");
    std::size_t rr = static_cast<std::size_t>(r);
    if (h.size() < rr) return std::nullopt;
    std::size_t parts = 2 * rr;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(trial)));
        std::vector<Bitset> part(parts, Bitset(h.n()));
        for (std::size_t e = 0; e < h.n(); ++e) part[rng.below(parts)].set(e);

        std::vector<int> chosen;
        std::vector<bool> used(h.size(), false);
        for (std::size_t p = 0; p < parts && chosen.size() < rr; ++p) {
            for (std::size_t i = 0; i < h.size(); ++i) {
                if (used[i] || !h.members[i].subset_of(part[p])) continue;
                used[i] = true;
                chosen.push_back(static_cast<int>(i));
                break;
            }
        }
        if (chosen.size() < rr) continue;
        std::sort(chosen.begin(), chosen.end());
        auto cert = is_sunflower(h, chosen);
        if (cert && (rr == 1 || cert->kernel.none())) return cert;
    }
    return std::nullopt;
}

}  // namespace sunflower
