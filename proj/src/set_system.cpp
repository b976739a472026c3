#include "sunflower/set_system.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sunflower {

SetSystem build_system(const std::vector<std::string>& ground, const std::vector<std::vector<std::string>>& sets) {
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(ground.size());
    for (std::size_t i = 0; i < ground.size(); ++i) {
        const std::string& label = ground[i];
        if (label.empty() || label[0] == '#' || label[0] == '!' ||
            label.find_first_of(" \t\r\n") != std::string::npos)
            throw std::invalid_argument("label unusable in the text format: '" + label + "'");
        if (!index.emplace(label, i).second)
            throw std::invalid_argument("duplicate ground label: " + label);
    }
    SetSystem h;
    h.ground = ground;
    std::unordered_set<Bitset, BitsetHash> seen;
    for (const auto& set : sets) {
        Bitset mask(ground.size());
        for (const std::string& label : set) {
            auto it = index.find(label);
            if (it == index.end()) throw std::invalid_argument("unknown label: " + label);
            mask.set(it->second);
        }
        if (seen.insert(mask).second) h.members.push_back(std::move(mask));
    }
    return h;
}

SetSystem make_family(std::size_t n, const std::vector<std::vector<int>>& sets) {
    SetSystem h;
    h.ground.reserve(n);
    for (std::size_t i = 0; i < n; ++i) h.ground.push_back("x" + std::to_string(i));
    std::unordered_set<Bitset, BitsetHash> seen;
    for (const auto& set : sets) {
        Bitset mask(n);
        for (int e : set) {
            if (e < 0 || static_cast<std::size_t>(e) >= n) throw std::invalid_argument("element index out of range");
            mask.set(static_cast<std::size_t>(e));
        }
        if (seen.insert(mask).second) h.members.push_back(std::move(mask));
    }
    return h;
}

SetSystem family_from_masks(std::vector<std::string> ground, const std::vector<Bitset>& masks) {
    SetSystem h;
    h.ground = std::move(ground);
    std::unordered_set<Bitset, BitsetHash> seen;
    for (const Bitset& m : masks) {
        assert(m.universe_size() == h.ground.size());
        if (seen.insert(m).second) h.members.push_back(m);
    }
    return h;
}

SetSystem trace(const SetSystem& h, const Bitset& u) {
    assert(u.universe_size() == h.n());
    std::vector<int> kept = u.elements();
    std::vector<int> new_index(h.n(), -1);
    SetSystem t;
    t.ground.reserve(kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j) {
        new_index[static_cast<std::size_t>(kept[j])] = static_cast<int>(j);
        t.ground.push_back(h.ground[static_cast<std::size_t>(kept[j])]);
    }
    std::unordered_set<Bitset, BitsetHash> seen;
    for (const Bitset& s : h.members) {
        Bitset cut(kept.size());
        for (int e : (s & u).elements()) cut.set(static_cast<std::size_t>(new_index[static_cast<std::size_t>(e)]));
        if (seen.insert(cut).second) t.members.push_back(std::move(cut));
    }
    return t;
}

bool upset_contains(const SetSystem& h, const Bitset& a) {
    assert(a.universe_size() == h.n());
    for (const Bitset& s : h.members)
        if (s.subset_of(a)) return true;
    return false;
}

SetSystem minimal_sets(const SetSystem& family) {
    SetSystem out;
    out.ground = family.ground;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < family.members.size() && minimal; ++j) {
            if (i == j) continue;
            const Bitset& other = family.members[j];
            if (other.subset_of(family.members[i]) && other != family.members[i]) minimal = false;
        }
        if (minimal) out.members.push_back(family.members[i]);
    }
    return out;
}

Bitset core(const SetSystem& h, const Bitset& a) {
    assert(a.universe_size() == h.n());
    bool found = false;
    Bitset result(h.n());
    for (const Bitset& s : h.members) {
        if (!s.subset_of(a)) continue;
        if (!found) {
            result = s;
            found = true;
        } else {
            result &= s;
        }
    }
    if (!found) throw std::domain_error("core undefined: set is not in the upset of the family");
    return result;
}

}  // namespace sunflower
