#ifndef GPEDIM_CLAIMS_HPP
#define GPEDIM_CLAIMS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "gpedim/graph.hpp"

namespace gpedim {

enum class Claim { NoTriad, TetradResolves, EqualPairSets, CommonWitness, SporadicPairs, Undeviating };

Claim parse_claim(std::string_view text); // no-triad, tetrad, lemma-ab, prop-sw, lemma-w, undeviating
std::string to_string(Claim claim);

struct ClaimRange {
    Index min_n;
    Index max_n; // inclusive budget cap
};

// Valid n for each claim; max_n for NoTriad is lifted by allow_large.
ClaimRange claim_range(Claim claim, bool allow_large = false);

struct ClaimResult {
    Index n = 0;
    bool pass = false;
    std::string detail; // a short summary on success, the serialized counterexample on failure
};

// Throws UnsupportedRange outside claim_range, BudgetExceeded above the cap.
ClaimResult check_claim(Claim claim, Index n, bool allow_large = false);

} // namespace gpedim

#endif
