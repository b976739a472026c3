#include "sunflower/spread.hpp"

#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "sunflower/gen.hpp"

namespace sunflower {

SetSystem reduced_family(const SetSystem& h, const Bitset& w) {
    assert(w.universe_size() == h.n());
    std::vector<Bitset> residues;
    residues.reserve(h.size());
    for (const Bitset& s : h.members) residues.push_back(s.minus(w));
    return minimal_sets(family_from_masks(h.ground, residues));
}

namespace {

// The chosen minimal set F(S) ⊆ S \ W.  Lexicographic takes the least
// candidate in element-sequence order; seeded_random fixes a pseudorandom
// choice per (W, member) so the map is still a function of (H, W).
Bitset choose_representative(const std::vector<Bitset>& reduced, const Bitset& s_minus_w, const Bitset& w,
                             std::size_t member_index, ChooserRule rule) {
    std::vector<const Bitset*> candidates;
    for (const Bitset& f : reduced)
        if (f.subset_of(s_minus_w)) candidates.push_back(&f);
    assert(!candidates.empty());
    if (rule.kind == ChooserKind::lexicographic) {
        const Bitset* best = candidates[0];
        for (const Bitset* c : candidates)
            if (lex_less(*c, *best)) best = c;
        return *best;
    }
    std::uint64_t h = rule.seed;
    h = Rng::mix(h, w.hash());
    h = Rng::mix(h, static_cast<std::uint64_t>(member_index));
    Rng rng(h);
    return *candidates[rng.below(candidates.size())];
}

}  // namespace

SpreadDecomposition decompose(const SetSystem& h, const Bitset& w, std::size_t t, ChooserRule rule) {
    if (h.members.empty()) throw std::invalid_argument("decompose requires a nonempty family");
    assert(w.universe_size() == h.n());

    SpreadDecomposition out;
    out.w = w;
    out.t = t;
    out.small.ground = h.ground;
    out.large.ground = h.ground;

    SetSystem reduced = reduced_family(h, w);
    std::unordered_set<Bitset, BitsetHash> small_seen, large_seen;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Bitset& s = h.members[i];
        Bitset f = choose_representative(reduced.members, s.minus(w), w, i, rule);
        Bitset fstar = s & core(h, w | f);
        assert(f.subset_of(fstar) && fstar.subset_of(s));
        assert(fstar.minus(w) == f);
        if (f.count() < t) {
            if (small_seen.insert(f).second) out.small.members.push_back(f);
        } else {
            if (large_seen.insert(fstar).second) out.large.members.push_back(fstar);
        }
        out.chosen.push_back(std::move(f));
        out.f_star.push_back(std::move(fstar));
    }
    return out;
}

Rational expectation_large_weight_exact(const SetSystem& h, const Rational& p, const Rational& q, std::size_t t,
                                        ChooserRule rule, const SpreadLimits& limits) {
    std::size_t n = h.n();
    if (n > limits.max_exact_n || n > 26)  // 26: hard cap for the word-mask enumeration
        throw std::runtime_error("expectation_large_weight_exact: ground set of size " + std::to_string(n) +
                                 " exceeds the exact limit (" + std::to_string(std::min<std::size_t>(limits.max_exact_n, 26)) +
                                 "); sample the expectation instead");
    if (p < Rational(0) || p > Rational(1) || q < Rational(0) || q > Rational(1))
        throw std::invalid_argument("p and q must lie in [0,1]");
    if (h.members.empty()) return Rational(0);

    // All-integer accumulation on the common denominator pd^n * qd^n:
    // Pr[W] = pn^|W| (pd-pn)^(n-|W|) / pd^n and q^k = qn^k qd^(n-k) / qd^n
    // (member sizes never exceed n).
    const BigUint pn = p.num().magnitude();
    const BigUint pd = p.den();
    const BigUint qn = q.num().magnitude();
    const BigUint qd = q.den();
    const BigUint pc = pd - pn;

    std::vector<BigUint> pow_pn(n + 1), pow_pc(n + 1), pow_qn(n + 1), pow_qd(n + 1);
    pow_pn[0] = pow_pc[0] = pow_qn[0] = pow_qd[0] = BigUint(1);
    for (std::size_t k = 1; k <= n; ++k) {
        pow_pn[k] = pow_pn[k - 1] * pn;
        pow_pc[k] = pow_pc[k - 1] * pc;
        pow_qn[k] = pow_qn[k - 1] * qn;
        pow_qd[k] = pow_qd[k - 1] * qd;
    }

    auto weigh_range = [&](std::uint64_t lo, std::uint64_t hi) {
        BigUint acc;
        std::unordered_set<Bitset, BitsetHash> large_seen;
        for (std::uint64_t wmask = lo; wmask < hi; ++wmask) {
            Bitset w = Bitset::from_word(n, wmask);
            SpreadDecomposition dec = decompose(h, w, t, rule);
            large_seen.clear();
            BigUint inner;  // sum of qn^|F| qd^(n-|F|) over the large family
            for (std::size_t i = 0; i < h.size(); ++i) {
                if (dec.chosen[i].count() >= t && large_seen.insert(dec.f_star[i]).second) {
                    std::size_t k = dec.f_star[i].count();
                    inner += pow_qn[k] * pow_qd[n - k];
                }
            }
            if (inner.is_zero()) continue;
            std::size_t wsize = static_cast<std::size_t>(__builtin_popcountll(wmask));
            acc += pow_pn[wsize] * pow_pc[n - wsize] * inner;
        }
        return acc;
    };

    std::uint64_t total = std::uint64_t(1) << n;
    BigUint numerator;
    unsigned threads = std::max(1u, limits.threads);
    if (threads == 1 || total < 1024) {
        numerator = weigh_range(0, total);
    } else {
        std::vector<BigUint> partial(threads);
        std::vector<std::thread> pool;
        std::uint64_t chunk = total / threads + 1;
        for (unsigned ti = 0; ti < threads; ++ti) {
            std::uint64_t lo = ti * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, ti, lo, hi] { partial[ti] = weigh_range(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (const BigUint& part : partial) numerator += part;
    }

    return Rational(BigInt(numerator), BigUint::pow(pd, n) * BigUint::pow(qd, n));
}

namespace {

// Fixed rational upper bound on Euler's number; bounds computed with it can
// only over-estimate the true right-hand sides.
const Rational& euler_upper() {
    static const Rational e = Rational::parse("2.7182818285");
    return e;
}

}  // namespace

Rational count_bound(std::uint64_t ell, std::uint64_t d, const Rational& q, const Rational& p, std::uint64_t t) {
    if (d == 0 || d > ell) throw std::invalid_argument("count_bound requires 1 <= d <= ell");
    if (q <= Rational(0) || p < Rational(2) * q) throw std::invalid_argument("count_bound requires p >= 2q > 0");
    Rational ratio = euler_upper() * Rational(static_cast<std::int64_t>(ell), static_cast<std::int64_t>(d));
    return Rational(2) * ratio.pow(d) * (q / p).pow(t);
}

Rational count_bound_vc1(const Rational& q, const Rational& p, std::uint64_t t) {
    if (q <= Rational(0) || p < Rational(2) * q) throw std::invalid_argument("count_bound_vc1 requires p >= 2q > 0");
    return Rational(2) * (q / p).pow(t);
}

}  // namespace sunflower
