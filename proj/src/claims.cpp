#include "gpedim/claims.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

#include "gpedim/bfs.hpp"
#include "gpedim/closed_form.hpp"
#include "gpedim/engine.hpp"
#include "gpedim/errors.hpp"

namespace gpedim {

namespace {

struct ClaimInfo {
    Claim claim;
    std::string_view name;
    ClaimRange range;
};

constexpr ClaimInfo kClaims[] = {
    {Claim::NoTriad, "no-triad", {kDimensionFourMinN, kSweepDefaultMaxN}},
    {Claim::TetradResolves, "tetrad", {kTetradMinN, 5000}},
    {Claim::EqualPairSets, "lemma-ab", {kEqualPairClosedMinN, 2000}},
    {Claim::CommonWitness, "prop-sw", {kSporadicMinN, 1000}},
    {Claim::SporadicPairs, "lemma-w", {kSporadicMinN, 2000}},
    {Claim::Undeviating, "undeviating", {kClosedFormMinN, 500}},
};

const ClaimInfo& info(Claim claim) {
    return *std::find_if(std::begin(kClaims), std::end(kClaims), [&](const ClaimInfo& c) { return c.claim == claim; });
}

std::string pair_text(const std::pair<Edge, Edge>& p) { return to_string(p.first) + "|" + to_string(p.second); }

ClaimResult no_triad(Index n, bool allow_large) {
    SweepOptions options;
    options.allow_large = allow_large;
    const SweepResult sweep = verify_no_resolving_triad(n, options);
    if (sweep.resolving) {
        return {n, false, "resolving triad " + sweep.resolving->to_string()};
    }
    return {n, true, std::to_string(sweep.checked) + " triads checked"};
}

ClaimResult tetrad(Index n) {
    const LandmarkList set = resolving_tetrad(n);
    const ResolveVerdict verdict = is_edge_resolving(GPGraph::build(n, 3), set);
    if (!verdict.resolving()) {
        return {n, false, set.to_string() + " confuses " + pair_text(*verdict.witness)};
    }
    return {n, true, set.to_string()};
}

ClaimResult lemma_ab(Index n) {
    const DistanceTable table(GPGraph::build(n, 3));
    const ResidueContext ctx = ResidueContext::of(n);
    const EqualPairSet a = equal_pair_set_brute(table, PairLayer::A, 0);
    const EqualPairSet b = equal_pair_set_brute(table, PairLayer::B, 0);
    const EqualPairSet a_closed = equal_pair_set_closed(ctx, PairLayer::A, 0);
    const EqualPairSet b_closed = equal_pair_set_closed(ctx, PairLayer::B, 0);
    auto first_difference = [](const EqualPairSet& x, const EqualPairSet& y) {
        std::vector<Index> diff;
        std::set_symmetric_difference(x.indices.begin(), x.indices.end(), y.indices.begin(), y.indices.end(),
                                      std::back_inserter(diff));
        return diff.front();
    };
    if (a != a_closed) {
        return {n, false, "A_0 differs at index " + std::to_string(first_difference(a, a_closed))};
    }
    if (b != b_closed) {
        return {n, false, "B_0 differs at index " + std::to_string(first_difference(b, b_closed))};
    }
    for (Index i : a.indices) {
        if (!b.contains(i)) {
            return {n, false, "index " + std::to_string(i) + " lies in A_0 but not B_0"};
        }
    }
    return {n, true, "|A_0|=" + std::to_string(a.indices.size()) + " |B_0|=" + std::to_string(b.indices.size())};
}

ClaimResult prop_sw(Index n) {
    const DistanceTable table(GPGraph::build(n, 3));
    const CommonWitnessFinder finder(table);
    const SporadicSet w = W_set(n);
    std::size_t witnessed = 0;
    for (const CanonicalPair& p : enumerate_S(n)) {
        const auto found = finder.least_common(p.a, p.b);
        if (found.has_value() == w.contains(p)) {
            return {n, false,
                    "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ") " +
                        (found ? "lies in W_n but has common index " + std::to_string(*found)
                               : "has an empty intersection outside W_n")};
        }
        if (const auto witness = common_A_witness(table, finder, p)) {
            ++witnessed;
        }
    }
    return {n, true, std::to_string(witnessed) + " pairs witnessed, |W_n|=" + std::to_string(w.pairs.size())};
}

ClaimResult lemma_w(Index n) {
    const DistanceTable table(GPGraph::build(n, 3));
    const SporadicSet w = W_set(n);
    for (const CanonicalPair& p : w.pairs) {
        for (const TriadShape& shape : TriadShape::all()) {
            try {
                confusable_witness(table, p, shape);
            } catch (const ConsistencyError& e) {
                return {n, false, e.what()};
            }
        }
    }
    return {n, true, std::to_string(8 * w.pairs.size()) + " sporadic triads confused"};
}

ClaimResult undeviating(Index n) {
    const GPGraph g = GPGraph::build(n, 3);
    for (const Vertex& x : g.vertices()) {
        const auto truth = bfs_distances(g, x);
        const auto cw = directional_distances(g, x, Orientation::Clockwise);
        const auto ccw = directional_distances(g, x, Orientation::Counterclockwise);
        const auto cw2 = directional_distances(g, x, Orientation::Clockwise, 2);
        const auto ccw2 = directional_distances(g, x, Orientation::Counterclockwise, 2);
        for (Index id = 0; id < g.vertex_count(); ++id) {
            const auto i = static_cast<std::size_t>(id);
            auto best = [](Index p, Index q) {
                if (p == kUnreachable) return q;
                if (q == kUnreachable) return p;
                return std::min(p, q);
            };
            if (best(cw[i], ccw[i]) != truth[i] || best(cw2[i], ccw2[i]) != truth[i]) {
                return {n, false,
                        to_string(x) + " -> " + to_string(g.vertex_at(id)) + ": bfs " + std::to_string(truth[i]) +
                            ", undeviating " + std::to_string(best(cw[i], ccw[i])) + ", with <=2 spokes " +
                            std::to_string(best(cw2[i], ccw2[i]))};
            }
        }
    }
    return {n, true, std::to_string(g.vertex_count() * g.vertex_count()) + " ordered pairs"};
}

} // namespace

Claim parse_claim(std::string_view text) {
    for (const ClaimInfo& c : kClaims) {
        if (c.name == text) {
            return c.claim;
        }
    }
    throw DomainError("unknown claim '" + std::string(text) +
                      "'; expected no-triad, tetrad, lemma-ab, prop-sw, lemma-w or undeviating");
}

std::string to_string(Claim claim) { return std::string(info(claim).name); }

ClaimRange claim_range(Claim claim, bool allow_large) {
    ClaimRange range = info(claim).range;
    if (claim == Claim::NoTriad && allow_large) {
        range.max_n = std::numeric_limits<Index>::max();
    }
    return range;
}

ClaimResult check_claim(Claim claim, Index n, bool allow_large) {
    const ClaimRange range = claim_range(claim, allow_large);
    if (n < range.min_n) {
        throw UnsupportedRange(to_string(claim) + " is stated for n >= " + std::to_string(range.min_n) + ", got " +
                               std::to_string(n));
    }
    if (n > range.max_n) {
        throw BudgetExceeded(to_string(claim) + " is capped at n <= " + std::to_string(range.max_n) + ", got " +
                             std::to_string(n));
    }
    switch (claim) {
    case Claim::NoTriad: return no_triad(n, allow_large);
    case Claim::TetradResolves: return tetrad(n);
    case Claim::EqualPairSets: return lemma_ab(n);
    case Claim::CommonWitness: return prop_sw(n);
    case Claim::SporadicPairs: return lemma_w(n);
    case Claim::Undeviating: return undeviating(n);
    }
    throw DomainError("unknown claim");
}

} // namespace gpedim
