#include "sunflower/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "sunflower/bounds.hpp"
#include "sunflower/gen.hpp"
#include "sunflower/vc.hpp"

namespace sunflower {

bool cover_is_valid(const SetSystem& h, const CoverCertificate& cover) {
    Rational weight(0);
    for (const Bitset& f : cover.pieces.members) weight = weight + cover.q.pow(f.count());
    if (weight != cover.weight) return false;
    for (const Bitset& s : h.members) {
        bool covered = false;
        for (const Bitset& f : cover.pieces.members)
            if (f.subset_of(s)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

namespace {

Rational clamp_probability(const Rational& p) {
    if (p < Rational(0)) throw std::invalid_argument("negative probability");
    return p > Rational(1) ? Rational(1) : p;
}

// Counts, for every cardinality, the subsets W with W ∈ ⟨H⟩; single pass in
// increasing mask order (an upset member either is a member itself or stays
// one after removing a point).
std::vector<std::uint64_t> upset_counts_dp(const SetSystem& h) {
    std::size_t n = h.n();
    std::uint64_t total = std::uint64_t(1) << n;
    std::vector<std::uint8_t> up(total, 0);
    for (const Bitset& s : minimal_sets(h).members) up[s.to_word()] = 1;
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::uint64_t w = 0; w < total; ++w) {
        if (!up[w]) {
            std::uint64_t rest = w;
            while (rest) {
                std::uint64_t low = rest & (~rest + 1);
                if (up[w ^ low]) {
                    up[w] = 1;
                    break;
                }
                rest ^= low;
            }
        }
        if (up[w]) ++counts[static_cast<std::size_t>(__builtin_popcountll(w))];
    }
    return counts;
}

// Partitioned direct check, used when several workers are requested.
std::vector<std::uint64_t> upset_counts_direct(const SetSystem& h, unsigned threads) {
    std::size_t n = h.n();
    std::uint64_t total = std::uint64_t(1) << n;
    std::vector<std::uint64_t> mins;
    for (const Bitset& s : minimal_sets(h).members) mins.push_back(s.to_word());

    auto count_range = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> counts(n + 1, 0);
        for (std::uint64_t w = lo; w < hi; ++w)
            for (std::uint64_t m : mins)
                if ((m & w) == m) {
                    ++counts[static_cast<std::size_t>(__builtin_popcountll(w))];
                    break;
                }
        return counts;
    };

    std::vector<std::vector<std::uint64_t>> partial(threads);
    std::vector<std::thread> pool;
    std::uint64_t chunk = total / threads + 1;
    for (unsigned ti = 0; ti < threads; ++ti) {
        std::uint64_t lo = ti * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, ti, lo, hi] { partial[ti] = count_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (const auto& part : partial)
        for (std::size_t k = 0; k < part.size(); ++k) counts[k] += part[k];
    return counts;
}

}  // namespace

Rational prob_upset_exact(const SetSystem& h, const Rational& p_in, const ThresholdLimits& limits) {
    std::size_t n = h.n();
    if (n > limits.max_prob_n || n > 26)  // 26: hard cap for the word-mask enumeration
        throw std::runtime_error("prob_upset_exact: ground set of size " + std::to_string(n) +
                                 " exceeds the exact limit (" + std::to_string(std::min<std::size_t>(limits.max_prob_n, 26)) +
                                 "); use prob_upset_mc");
    Rational p = clamp_probability(p_in);
    if (h.members.empty()) return Rational(0);

    std::vector<std::uint64_t> counts =
        limits.threads > 1 ? upset_counts_direct(h, limits.threads) : upset_counts_dp(h);

    const BigUint pn = p.num().magnitude();
    const BigUint pd = p.den();
    const BigUint pc = pd - pn;
    BigUint numerator;
    BigUint pow_lo(1);
    std::vector<BigUint> pow_hi(n + 1);
    pow_hi[0] = BigUint(1);
    for (std::size_t k = 1; k <= n; ++k) pow_hi[k] = pow_hi[k - 1] * pc;
    for (std::size_t k = 0; k <= n; ++k) {
        if (counts[k]) numerator += BigUint(counts[k]) * pow_lo * pow_hi[n - k];
        pow_lo *= pn;
    }
    return Rational(BigInt(numerator), BigUint::pow(pd, n));
}

McEstimate prob_upset_mc(const SetSystem& h, const Rational& p_in, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 100) throw std::invalid_argument("prob_upset_mc requires at least 100 trials");
    Rational p = clamp_probability(p_in);
    std::vector<Bitset> mins = minimal_sets(h).members;

    bool always = p == Rational(1);
    std::uint64_t threshold = 0;
    if (!always && !p.is_zero()) {
        BigUint scaled = BigUint::divmod(p.num().magnitude() << 64, p.den()).first;
        threshold = scaled.fits_u64() ? scaled.to_u64() : ~std::uint64_t(0);
    }

    Rng rng(seed);
    std::size_t n = h.n();
    std::uint64_t hits = 0;
    Bitset w(n);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        for (std::size_t e = 0; e < n; ++e) {
            bool in = always || (!p.is_zero() && rng.next() < threshold);
            if (in)
                w.set(e);
            else
                w.reset(e);
        }
        for (const Bitset& m : mins)
            if (m.subset_of(w)) {
                ++hits;
                break;
            }
    }
    McEstimate est;
    est.hits = hits;
    est.trials = trials;
    est.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    const double z99 = 2.5758293035489004;
    est.half_width = z99 * std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
    return est;
}

namespace {

struct CoverGroup {
    std::uint64_t coverage = 0;  // members containing the piece
    Bitset piece;
    std::size_t piece_size = 0;
    BigUint weight_num;  // q^|piece| scaled by qd^L
};

}  // namespace

std::pair<Rational, CoverCertificate> min_cover_weight(const SetSystem& h, const Rational& q,
                                                       const ThresholdLimits& limits) {
    if (q < Rational(0) || q > Rational(1)) throw std::invalid_argument("q must lie in [0,1]");
    CoverCertificate cert;
    cert.pieces.ground = h.ground;
    cert.q = q;
    cert.weight = Rational(0);
    if (h.members.empty()) return {Rational(0), cert};
    if (h.size() > limits.max_cover_members || h.size() > 62)  // 62: coverage masks are single words
        throw std::runtime_error("min_cover_weight: family of size " + std::to_string(h.size()) +
                                 " exceeds the exact limit (" + std::to_string(std::min<std::size_t>(limits.max_cover_members, 62)) + ")");
    std::size_t subset_work = 0;
    for (const Bitset& s : h.members) {
        if (s.count() > 22) throw std::runtime_error("min_cover_weight: member too large for exact piece enumeration");
        subset_work += std::size_t(1) << s.count();
    }
    if (subset_work > (std::size_t(1) << 24))
        throw std::runtime_error("min_cover_weight: piece space too large for exact enumeration");

    const std::size_t m = h.size();
    const std::size_t ell = h.ell();
    const BigUint qn = q.num().magnitude();
    const BigUint qd = q.den();
    std::vector<BigUint> weight_by_size(ell + 1);  // q^k scaled by qd^ell
    for (std::size_t k = 0; k <= ell; ++k) weight_by_size[k] = BigUint::pow(qn, k) * BigUint::pow(qd, ell - k);

    // Candidate pieces: subsets of members, deduplicated, keeping per
    // coverage mask only the cheapest piece (largest, then lex-least).
    std::unordered_map<std::uint64_t, CoverGroup> best_by_coverage;
    std::unordered_map<Bitset, bool, BitsetHash> piece_seen;
    for (const Bitset& s : h.members) {
        std::vector<int> elems = s.elements();
        std::uint64_t piece_count = std::uint64_t(1) << elems.size();
        for (std::uint64_t choice = 0; choice < piece_count; ++choice) {
            Bitset piece(h.n());
            for (std::size_t j = 0; j < elems.size(); ++j)
                if (choice & (std::uint64_t(1) << j)) piece.set(static_cast<std::size_t>(elems[j]));
            if (!piece_seen.emplace(piece, true).second) continue;
            std::uint64_t coverage = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (piece.subset_of(h.members[i])) coverage |= std::uint64_t(1) << i;
            std::size_t k = piece.count();
            auto it = best_by_coverage.find(coverage);
            if (it == best_by_coverage.end()) {
                best_by_coverage.emplace(coverage, CoverGroup{coverage, piece, k, weight_by_size[k]});
            } else {
                CoverGroup& g = it->second;
                bool better = weight_by_size[k] < g.weight_num ||
                              (weight_by_size[k] == g.weight_num &&
                               (k > g.piece_size || (k == g.piece_size && lex_less(piece, g.piece))));
                if (better) g = CoverGroup{coverage, piece, k, weight_by_size[k]};
            }
        }
    }

    std::vector<CoverGroup> groups;
    groups.reserve(best_by_coverage.size());
    for (auto& [cov, g] : best_by_coverage) groups.push_back(std::move(g));
    // Drop dominated groups (worse weight, no extra coverage).
    std::sort(groups.begin(), groups.end(), [](const CoverGroup& a, const CoverGroup& b) {
        if (a.weight_num != b.weight_num) return a.weight_num < b.weight_num;
        if (a.coverage != b.coverage) return a.coverage > b.coverage;
        return lex_less(a.piece, b.piece);
    });
    std::vector<CoverGroup> kept;
    for (CoverGroup& g : groups) {
        bool dominated = false;
        for (const CoverGroup& k2 : kept)
            if ((g.coverage & ~k2.coverage) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(std::move(g));
    }

    // Memoized cover DP over the mask of still-uncovered members; each state
    // branches on groups covering its lowest member.
    std::vector<std::vector<std::size_t>> groups_with(m);
    for (std::size_t gi = 0; gi < kept.size(); ++gi)
        for (std::size_t i = 0; i < m; ++i)
            if (kept[gi].coverage & (std::uint64_t(1) << i)) groups_with[i].push_back(gi);

    std::uint64_t full = (m == 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1;
    std::unordered_map<std::uint64_t, std::pair<BigUint, std::size_t>> memo;  // mask -> (cost, chosen group)
    auto solve = [&](auto&& self, std::uint64_t mask) -> const BigUint& {
        static const BigUint zero;
        if (!mask) return zero;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second.first;
        std::size_t lowest = static_cast<std::size_t>(__builtin_ctzll(mask));
        BigUint best;
        std::size_t best_group = ~std::size_t(0);
        for (std::size_t gi : groups_with[lowest]) {
            BigUint cand = kept[gi].weight_num + self(self, mask & ~kept[gi].coverage);
            if (best_group == ~std::size_t(0) || cand < best) {
                best = std::move(cand);
                best_group = gi;
            }
        }
        // The piece equal to the member itself always exists, so some group
        // covers `lowest` and best_group is set.
        assert(best_group != ~std::size_t(0));
        return memo.emplace(mask, std::make_pair(std::move(best), best_group)).first->second.first;
    };
    BigUint total = solve(solve, full);

    // Reconstruct the chosen pieces.
    std::uint64_t mask = full;
    while (mask) {
        const auto& entry = memo.at(mask);
        const CoverGroup& g = kept[entry.second];
        cert.pieces.members.push_back(g.piece);
        mask &= ~g.coverage;
    }
    Rational weight(BigInt(total), BigUint::pow(qd, ell));
    cert.weight = weight;
    assert(cover_is_valid(h, cert));
    return {weight, cert};
}

std::string variant_name(KkVariant v) {
    switch (v) {
        case KkVariant::kk_bell:
            return "kk-bell";
        case KkVariant::vc:
            return "vc";
        case KkVariant::vc1:
            return "vc1";
    }
    return "?";
}

DichotomyReport kk_dichotomy(const SetSystem& h, const Rational& q, const Rational& epsilon, KkVariant variant,
                             const Rational* constant, const ThresholdLimits& limits) {
    if (epsilon <= Rational(0) || epsilon > Rational(1, 2))
        throw std::invalid_argument("epsilon must lie in (0, 1/2]");
    if (q < Rational(0) || q > Rational(1)) throw std::invalid_argument("q must lie in [0,1]");

    DichotomyReport rep;
    rep.variant = variant;
    rep.q = q;
    rep.epsilon = epsilon;
    if (variant == KkVariant::kk_bell) {
        rep.constant_used = constant ? *constant : Rational(48);
    } else {
        if (!constant) throw std::invalid_argument("variants vc and vc1 need an explicit constant");
        rep.constant_used = *constant;
    }

    std::size_t ell = h.ell();
    Rational log_term(0);
    switch (variant) {
        case KkVariant::kk_bell:
            if (ell > 0) log_term = Rational::log2_upper(Rational(static_cast<std::int64_t>(ell)) / epsilon);
            break;
        case KkVariant::vc: {
            std::size_t d = 0;
            if (!h.members.empty()) d = vc_dimension(h, limits.max_vc_n).dimension;
            rep.vc_dim_used = d;
            std::size_t d_eff = std::max<std::size_t>(d, 1);  // log(d/eps) needs d >= 1
            if (ell > 0)
                log_term = Rational::log2_upper(Rational(static_cast<std::int64_t>(d_eff)) / epsilon) +
                           log_star_smoothed(static_cast<std::uint64_t>(ell)).to_rational();
            break;
        }
        case KkVariant::vc1:
            if (ell > 0) log_term = Rational::log2_upper(Rational(1) / epsilon);
            break;
    }
    rep.p_evaluated = clamp_probability(rep.constant_used * q * log_term);

    auto [weight, cover] = min_cover_weight(h, q, limits);
    rep.min_weight = weight;
    rep.best_cover = std::move(cover);
    rep.prob_upset = prob_upset_exact(h, rep.p_evaluated, limits);
    rep.cover_threshold = variant == KkVariant::kk_bell ? Rational(1, 2) : Rational(2, 3);
    rep.branch1_holds = rep.min_weight <= rep.cover_threshold;
    rep.branch2_holds = rep.prob_upset > Rational(1) - epsilon;
    return rep;
}

}  // namespace sunflower
