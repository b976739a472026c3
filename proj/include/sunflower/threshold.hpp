#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "sunflower/num.hpp"
#include "sunflower/set_system.hpp"

namespace sunflower {

// A family F with H ⊆ ⟨F⟩ and its weight Σ q^|F|.
struct CoverCertificate {
    SetSystem pieces;
    Rational q;
    Rational weight;
};

bool cover_is_valid(const SetSystem& h, const CoverCertificate& cover);

struct ThresholdLimits {
    std::size_t max_prob_n = 22;       // exact upset-probability enumeration
    std::size_t max_cover_members = 14;  // exact minimum-weight cover
    std::size_t max_vc_n = 24;         // exact VC-dimension (vc variant)
    unsigned threads = 1;
};

// Pr[W ∈ ⟨H⟩] for W ~ X_p, exact.  p above 1 is clamped to 1 (X_p := X_1).
Rational prob_upset_exact(const SetSystem& h, const Rational& p, const ThresholdLimits& limits = {});

struct McEstimate {
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    double estimate = 0.0;
    double half_width = 0.0;  // two-sided 99% confidence, normal approximation
};

McEstimate prob_upset_mc(const SetSystem& h, const Rational& p, std::uint64_t trials, std::uint64_t seed);

// Exact minimum of Σ q^|F| over families F with H ⊆ ⟨F⟩.  Any optimal cover
// may be assumed to consist of subsets of members (shrinking a piece into a
// member it covers never raises the weight), which makes the search a
// minimum-weight set cover over member-coverage masks.
std::pair<Rational, CoverCertificate> min_cover_weight(const SetSystem& h, const Rational& q,
                                                       const ThresholdLimits& limits = {});

enum class KkVariant { kk_bell, vc, vc1 };

std::string variant_name(KkVariant v);

// Both branches of the threshold dichotomy, evaluated exactly.  The p given
// by the variant formula is irrational in general; it is replaced by a
// dyadic upper bound (documented in the report), then clamped at 1.
struct DichotomyReport {
    KkVariant variant = KkVariant::kk_bell;
    Rational q, epsilon;
    Rational constant_used;
    Rational p_evaluated;  // dyadic upper bound of the variant formula, capped at 1
    Rational min_weight;
    CoverCertificate best_cover;
    Rational prob_upset;
    Rational cover_threshold;  // 1/2 for kk-bell, 2/3 for vc and vc1
    bool branch1_holds = false;  // min_weight <= cover_threshold
    bool branch2_holds = false;  // prob_upset > 1 - epsilon
    std::size_t vc_dim_used = 0;  // vc variant only
};

// constant: required for vc/vc1 (no canonical value exists); kk-bell
// defaults to 48.
DichotomyReport kk_dichotomy(const SetSystem& h, const Rational& q, const Rational& epsilon, KkVariant variant,
                             const Rational* constant = nullptr, const ThresholdLimits& limits = {});

}  // namespace sunflower
