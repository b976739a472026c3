#include "sunflower/vc.hpp"

#include <stdexcept>

namespace sunflower {

bool shatters(const SetSystem& h, const Bitset& t) {
    assert(t.universe_size() == h.n());
    if (h.members.empty()) return false;
    std::vector<int> pos = t.elements();
    std::size_t k = pos.size();
    // A family realizes at most |H| traces, so it cannot shatter a set with
    // 2^k > |H|.
    if (k >= 64 || (std::uint64_t(1) << k) > h.size()) return k == 0;
    std::uint64_t want = std::uint64_t(1) << k;
    std::vector<std::uint8_t> seen(want, 0);
    std::uint64_t distinct = 0;
    for (const Bitset& s : h.members) {
        std::uint64_t key = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (s.test(static_cast<std::size_t>(pos[j]))) key |= std::uint64_t(1) << j;
        if (!seen[key]) {
            seen[key] = 1;
            if (++distinct == want) return true;
        }
    }
    return false;
}

ShatterReport vc_dimension(const SetSystem& h, std::size_t max_ground) {
    if (h.members.empty()) throw std::domain_error("VC-dimension undefined for the empty family");
    if (h.n() > max_ground)
        throw std::runtime_error("ground set of size " + std::to_string(h.n()) +
                                 " exceeds the exact VC limit (" + std::to_string(max_ground) + ")");
    std::vector<Bitset> level = {Bitset(h.n())};  // the empty set is always shattered
    ShatterReport best{level[0], 0};
    while (!level.empty()) {
        std::vector<Bitset> next;
        for (const Bitset& t : level) {
            int start = t.last() + 1;
            for (std::size_t e = static_cast<std::size_t>(start); e < h.n(); ++e) {
                Bitset ext = t;
                ext.set(e);
                if (shatters(h, ext)) next.push_back(std::move(ext));
            }
        }
        if (next.empty()) break;
        best.witness = next[0];
        for (const Bitset& t : next)
            if (lex_less(t, best.witness)) best.witness = t;
        best.dimension = best.witness.count();
        level = std::move(next);
    }
    return best;
}

BigUint sauer_shelah_bound(std::uint64_t n, std::uint64_t d) {
    if (d > n) throw std::invalid_argument("Sauer–Shelah bound requires d <= n");
    BigUint total;
    for (std::uint64_t i = 0; i <= d; ++i) total += BigUint::binomial(n, i);
    return total;
}

}  // namespace sunflower
