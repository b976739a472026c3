#include "sunflower/gen.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "sunflower/vc.hpp"

namespace sunflower {

SetSystem tree_family(std::uint64_t r, std::uint64_t ell) {
    if (r < 2) throw std::invalid_argument("tree_family requires r >= 2");
    if (ell < 1) throw std::invalid_argument("tree_family requires ell >= 1");
    std::uint64_t branch = r - 1;
    std::uint64_t leaves = 1;
    for (std::uint64_t level = 0; level < ell; ++level) {
        if (leaves > (std::uint64_t(1) << 20) / branch) throw std::invalid_argument("tree_family: (r-1)^ell too large");
        leaves *= branch;
    }

    // Edges indexed level by level; the edge into a node is named by the
    // node's child-index path from the root.
    SetSystem h;
    std::vector<std::uint64_t> level_offset(ell, 0);  // edges above each level
    std::uint64_t acc = 0;
    std::uint64_t nodes_at_level = 1;
    for (std::uint64_t level = 1; level <= ell; ++level) {
        level_offset[level - 1] = acc;
        nodes_at_level *= branch;
        acc += nodes_at_level;
    }
    std::uint64_t total_edges = acc;

    h.ground.resize(total_edges);
    for (std::uint64_t level = 1; level <= ell; ++level) {
        std::uint64_t count = 1;
        for (std::uint64_t i = 0; i < level; ++i) count *= branch;
        for (std::uint64_t node = 0; node < count; ++node) {
            // Decode the child-index path of this node (most significant first).
            std::string label;
            std::uint64_t rest = node;
            std::vector<std::uint64_t> digits(level);
            for (std::uint64_t i = level; i-- > 0;) {
                digits[i] = rest % branch;
                rest /= branch;
            }
            for (std::uint64_t i = 0; i < level; ++i) {
                if (i) label += '.';
                label += std::to_string(digits[i]);
            }
            h.ground[level_offset[level - 1] + node] = label;
        }
    }

    for (std::uint64_t leaf = 0; leaf < leaves; ++leaf) {
        Bitset path(total_edges);
        std::uint64_t node = leaf;
        for (std::uint64_t level = ell; level >= 1; --level) {
            path.set(level_offset[level - 1] + node);
            node /= branch;
        }
        h.members.push_back(std::move(path));
    }
    return h;
}

PaddedFamily pad_to_uniform(const SetSystem& h, std::size_t ell) {
    if (h.ell() > ell) throw std::invalid_argument("pad_to_uniform: ell below the maximum member size");
    std::size_t extra = 0;
    for (const Bitset& s : h.members) extra += ell - s.count();

    PaddedFamily out;
    out.original_n = h.n();
    out.padded.ground = h.ground;
    out.padded.ground.reserve(h.n() + extra);

    std::size_t next_fresh = h.n();
    for (std::size_t i = 0; i < h.members.size(); ++i) {
        Bitset mask = h.members[i].resized(h.n() + extra);
        for (std::size_t k = h.members[i].count(); k < ell; ++k) {
            out.padded.ground.push_back("pad." + std::to_string(i) + "." + std::to_string(k));
            mask.set(next_fresh++);
        }
        out.padded.members.push_back(std::move(mask));
    }
    return out;
}

namespace {

// Uniform subset of size <= ell: pick the size with weight C(n,s), then a
// uniform s-subset.
Bitset random_bounded_subset(Rng& rng, std::size_t n, std::size_t ell) {
    ell = std::min(ell, n);
    std::vector<BigUint> csum(ell + 2);
    BigUint total;
    for (std::size_t s = 0; s <= ell; ++s) {
        csum[s] = total;
        total += BigUint::binomial(n, s);
    }
    csum[ell + 1] = total;
    // Draw below the total (fits u64 at desk scale; guard anyway).
    std::size_t size = ell;
    if (total.fits_u64()) {
        std::uint64_t v = rng.below(total.to_u64());
        for (std::size_t s = 0; s <= ell; ++s)
            if (BigUint(v) >= csum[s] && BigUint(v) < csum[s + 1]) {
                size = s;
                break;
            }
    } else {
        size = static_cast<std::size_t>(rng.below(ell + 1));
    }
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    Bitset mask(n);
    for (std::size_t k = 0; k < size; ++k) {
        std::size_t j = k + static_cast<std::size_t>(rng.below(n - k));
        std::swap(idx[k], idx[j]);
        mask.set(idx[k]);
    }
    return mask;
}

SetSystem uniform_random_family(const GeneratorConfig& cfg) {
    BigUint capacity;
    for (std::size_t s = 0; s <= std::min(cfg.ell, cfg.n); ++s) capacity += BigUint::binomial(cfg.n, s);
    if (BigUint(cfg.family_size) > capacity)
        throw std::invalid_argument("family_size exceeds the number of ell-bounded subsets");
    Rng rng(cfg.seed);
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> members;
    while (members.size() < cfg.family_size) {
        Bitset cand = random_bounded_subset(rng, cfg.n, cfg.ell);
        if (seen.insert(cand).second) members.push_back(std::move(cand));
    }
    SetSystem h;
    h.ground.reserve(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) h.ground.push_back("x" + std::to_string(i));
    h.members = std::move(members);
    return h;
}

SetSystem forest_path_family(const GeneratorConfig& cfg) {
    if (cfg.ell == 0 && cfg.family_size > 0)
        throw std::invalid_argument("forest_path: root-paths are nonempty, ell = 0 admits none");
    if (cfg.family_size > cfg.n) throw std::invalid_argument("forest_path: family_size exceeds node count");
    Rng rng(cfg.seed);
    // Random forest on nodes 0..n-1 with depth < ell: node i attaches to an
    // earlier node of depth < ell-1 or becomes a root.
    std::vector<int> parent(cfg.n, -1);
    std::vector<std::size_t> depth(cfg.n, 0);
    for (std::size_t i = 1; i < cfg.n; ++i) {
        std::vector<std::size_t> eligible;
        for (std::size_t j = 0; j < i; ++j)
            if (depth[j] + 1 < cfg.ell) eligible.push_back(j);
        std::uint64_t choice = rng.below(eligible.size() + 1);
        if (choice == eligible.size()) continue;  // new root
        parent[i] = static_cast<int>(eligible[choice]);
        depth[i] = depth[eligible[choice]] + 1;
    }
    // Members: node sets of the root-paths of family_size distinct nodes.
    std::vector<std::size_t> nodes(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) nodes[i] = i;
    for (std::size_t k = 0; k < cfg.family_size; ++k) {
        std::size_t j = k + static_cast<std::size_t>(rng.below(cfg.n - k));
        std::swap(nodes[k], nodes[j]);
    }
    SetSystem h;
    h.ground.reserve(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) h.ground.push_back("v" + std::to_string(i));
    for (std::size_t k = 0; k < cfg.family_size; ++k) {
        Bitset path(cfg.n);
        int v = static_cast<int>(nodes[k]);
        while (v >= 0) {
            path.set(static_cast<std::size_t>(v));
            v = parent[static_cast<std::size_t>(v)];
        }
        h.members.push_back(std::move(path));
    }
    return h;
}

}  // namespace

SetSystem random_family(const GeneratorConfig& cfg) {
    switch (cfg.kind) {
        case FamilyKind::uniform_random:
            return uniform_random_family(cfg);
        case FamilyKind::forest_path: {
            SetSystem h = forest_path_family(cfg);
            // Root-path families are VC <= 1 by construction; verify anyway.
            if (!h.members.empty() && vc_dimension(h, h.n()).dimension > 1)
                throw std::logic_error("forest_path generator produced VC > 1");
            return h;
        }
        case FamilyKind::rejection_vc1: {
            const int budget = 10000;
            for (int attempt = 0; attempt < budget; ++attempt) {
                GeneratorConfig sub = cfg;
                sub.kind = FamilyKind::uniform_random;
                sub.seed = Rng::mix(cfg.seed, static_cast<std::uint64_t>(attempt));
                SetSystem h = uniform_random_family(sub);
                if (h.members.empty() || vc_dimension(h, h.n()).dimension <= 1) return h;
            }
            throw std::runtime_error("rejection_vc1: retry budget exhausted");
        }
    }
    throw std::invalid_argument("unknown generator kind");
}

}  // namespace sunflower
