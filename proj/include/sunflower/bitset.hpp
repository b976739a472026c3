#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sunflower {

// Dynamic bitset over a fixed-width universe [0, nbits).  Element sets,
// ground-set subsets and family members are all stored this way; universes
// above 64 bits appear once padding introduces fresh elements.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset of(std::size_t nbits, std::initializer_list<int> elems) {
        Bitset b(nbits);
        for (int e : elems) b.set(static_cast<std::size_t>(e));
        return b;
    }

    static Bitset of(std::size_t nbits, const std::vector<int>& elems) {
        Bitset b(nbits);
        for (int e : elems) b.set(static_cast<std::size_t>(e));
        return b;
    }

    static Bitset full(std::size_t nbits) {
        Bitset b(nbits);
        for (std::size_t i = 0; i < b.words_.size(); ++i) b.words_[i] = ~0ull;
        b.trim();
        return b;
    }

    std::size_t universe_size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= 1ull << (i & 63);
    }

    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(1ull << (i & 63));
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    // Lowest set element; -1 if empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[i])));
        return -1;
    }

    int last() const {
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i]) return static_cast<int>(i * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(words_[i])));
        return -1;
    }

    bool subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    Bitset operator&(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        Bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    Bitset operator|(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        Bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    // Set difference: *this \ o.
    Bitset minus(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        Bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // Fixed total order for canonical storage (not the element-sequence order).
    static bool numeric_less(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(static_cast<int>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w))));
                w &= w - 1;
            }
        }
        return out;
    }

    // Same elements, universe re-sized.  Growing keeps all bits; shrinking
    // drops elements >= new_nbits (used to strip padding).
    Bitset resized(std::size_t new_nbits) const {
        Bitset r(new_nbits);
        for (std::size_t i = 0; i < r.words_.size() && i < words_.size(); ++i) r.words_[i] = words_[i];
        r.trim();
        return r;
    }

    std::uint64_t to_word() const {
        assert(nbits_ <= 64);
        return words_.empty() ? 0 : words_[0];
    }

    static Bitset from_word(std::size_t nbits, std::uint64_t w) {
        assert(nbits <= 64);
        Bitset b(nbits);
        if (!b.words_.empty()) b.words_[0] = w;
        b.trim();
        return b;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first_el = true;
        for (int e : elements()) {
            if (!first_el) s += ",";
            s += std::to_string(e);
            first_el = false;
        }
        return s + "}";
    }

private:
    void trim() {
        if (nbits_ % 64 != 0 && !words_.empty()) words_.back() &= (~0ull) >> (64 - nbits_ % 64);
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Order by ascending element sequence (lexicographic); the empty set comes
// first and a prefix precedes its extensions.  Used wherever a deterministic
// "least" set is required.
inline bool lex_less(const Bitset& a, const Bitset& b) {
    assert(a.universe_size() == b.universe_size());
    for (std::size_t i = 0; i < a.word_count(); ++i) {
        std::uint64_t diff = a.word(i) ^ b.word(i);
        if (!diff) continue;
        std::uint64_t low = diff & ~(diff - 1);
        if (a.word(i) & low) {
            // a owns the first differing element m: a < b unless b has no
            // element beyond m (then b is a proper prefix of a).
            std::uint64_t bhigh = b.word(i) & ~((low << 1) - 1);
            if (bhigh) return true;
            for (std::size_t j = i + 1; j < b.word_count(); ++j)
                if (b.word(j)) return true;
            return false;
        }
        std::uint64_t ahigh = a.word(i) & ~((low << 1) - 1);
        if (ahigh) return false;
        for (std::size_t j = i + 1; j < a.word_count(); ++j)
            if (a.word(j)) return false;
        return true;
    }
    return false;
}

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return static_cast<std::size_t>(b.hash()); }
};

}  // namespace sunflower
