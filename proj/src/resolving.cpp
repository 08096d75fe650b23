#include "gpedim/resolving.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gpedim/errors.hpp"

namespace gpedim {

LandmarkList::LandmarkList(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw DomainError("landmark list must be nonempty");
    }
    std::set<Vertex> seen;
    for (const Vertex& x : vertices_) {
        if (!seen.insert(x).second) {
            throw DomainError("landmark list repeats vertex " + gpedim::to_string(x));
        }
    }
}

std::string LandmarkList::to_string() const {
    std::string out;
    for (const Vertex& x : vertices_) {
        if (!out.empty()) {
            out += ',';
        }
        out += gpedim::to_string(x);
    }
    return out;
}

namespace {

void require_members(const GPGraph& g, const LandmarkList& landmarks) {
    for (const Vertex& x : landmarks) {
        if (!g.contains(x)) {
            throw DomainError("landmark " + to_string(x) + " is not a vertex of P(" + std::to_string(g.n()) + "," +
                              std::to_string(g.k()) + ")");
        }
    }
}

// Pairs (key, edge id), sorted; equal keys are equal representations. Keys pack up to four
// 16-bit distances, which covers every landmark list this library builds internally.
ResolveVerdict packed_verdict(const DistanceTable& table, const LandmarkList& landmarks) {
    const GPGraph& g = table.graph();
    std::vector<std::pair<std::uint64_t, Index>> keyed(static_cast<std::size_t>(g.edge_count()));
    for (Index id = 0; id < g.edge_count(); ++id) {
        const Edge e = g.edge_at(id);
        std::uint64_t key = 0;
        for (const Vertex& x : landmarks) {
            key = (key << 16) | static_cast<std::uint64_t>(table.at(x, e));
        }
        keyed[id] = {key, id};
    }
    std::sort(keyed.begin(), keyed.end());
    std::optional<std::pair<Index, Index>> best;
    for (std::size_t j = 0; j + 1 < keyed.size();) {
        std::size_t end = j + 1;
        while (end < keyed.size() && keyed[end].first == keyed[j].first) {
            ++end;
        }
        if (end - j >= 2) {
            const std::pair<Index, Index> candidate{keyed[j].second, keyed[j + 1].second};
            if (!best || candidate < *best) {
                best = candidate;
            }
        }
        j = end;
    }
    ResolveVerdict verdict;
    if (best) {
        verdict.witness = std::pair{g.edge_at(best->first), g.edge_at(best->second)};
    }
    return verdict;
}

ResolveVerdict generic_verdict(const DistanceTable& table, const LandmarkList& landmarks) {
    const GPGraph& g = table.graph();
    std::vector<std::pair<EdgeRepr, Index>> keyed;
    keyed.reserve(static_cast<std::size_t>(g.edge_count()));
    for (Index id = 0; id < g.edge_count(); ++id) {
        keyed.emplace_back(edge_representation(table, landmarks, g.edge_at(id)), id);
    }
    std::sort(keyed.begin(), keyed.end());
    std::optional<std::pair<Index, Index>> best;
    for (std::size_t j = 0; j + 1 < keyed.size(); ++j) {
        if (keyed[j].first == keyed[j + 1].first && (j == 0 || keyed[j - 1].first != keyed[j].first)) {
            const std::pair<Index, Index> candidate{keyed[j].second, keyed[j + 1].second};
            if (!best || candidate < *best) {
                best = candidate;
            }
        }
    }
    ResolveVerdict verdict;
    if (best) {
        verdict.witness = std::pair{g.edge_at(best->first), g.edge_at(best->second)};
    }
    return verdict;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    std::uint64_t result = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
        result = result * (n - k + j) / j;
    }
    return result;
}

} // namespace

EdgeRepr edge_representation(const GPGraph& g, const LandmarkList& landmarks, const Edge& e) {
    require_members(g, landmarks);
    EdgeRepr repr;
    repr.distances.reserve(landmarks.size());
    for (const Vertex& x : landmarks) {
        repr.distances.push_back(distance(g, x, e));
    }
    return repr;
}

EdgeRepr edge_representation(const DistanceTable& table, const LandmarkList& landmarks, const Edge& e) {
    require_members(table.graph(), landmarks);
    EdgeRepr repr;
    repr.distances.reserve(landmarks.size());
    for (const Vertex& x : landmarks) {
        repr.distances.push_back(table.at(x, e));
    }
    return repr;
}

bool same_representation(const DistanceTable& table, const LandmarkList& landmarks, const Edge& a, const Edge& b) {
    return std::all_of(landmarks.begin(), landmarks.end(),
                       [&](const Vertex& x) { return table.at(x, a) == table.at(x, b); });
}

ResolveVerdict is_edge_resolving(const GPGraph& g, const LandmarkList& landmarks) {
    return is_edge_resolving(DistanceTable(g), landmarks);
}

ResolveVerdict is_edge_resolving(const DistanceTable& table, const LandmarkList& landmarks) {
    require_members(table.graph(), landmarks);
    // Distances never exceed the vertex count, so 16-bit packing is exact below 2^16 vertices.
    if (landmarks.size() <= 4 && table.graph().vertex_count() < (Index{1} << 16)) {
        return packed_verdict(table, landmarks);
    }
    return generic_verdict(table, landmarks);
}

std::optional<LandmarkList> least_resolving_subset(const DistanceTable& table, std::size_t size,
                                                   std::uint64_t budget) {
    const GPGraph& g = table.graph();
    const auto vcount = static_cast<std::size_t>(g.vertex_count());
    if (size == 0 || size > vcount) {
        throw DomainError("subset size must be in 1..2n");
    }
    const std::uint64_t total = binomial(vcount, size);
    if (total > budget) {
        throw BudgetExceeded("searching all " + std::to_string(total) + " vertex subsets of size " +
                             std::to_string(size) + " exceeds the budget of " + std::to_string(budget));
    }
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
        std::vector<Vertex> chosen;
        chosen.reserve(size);
        for (std::size_t id : pick) {
            chosen.push_back(g.vertex_at(static_cast<Index>(id)));
        }
        LandmarkList candidate(std::move(chosen));
        if (is_edge_resolving(table, candidate).resolving()) {
            return candidate;
        }
        // Advance to the next combination in lexicographic order.
        std::size_t j = size;
        while (j > 0 && pick[j - 1] == vcount - size + (j - 1)) {
            --j;
        }
        if (j == 0) {
            return std::nullopt;
        }
        ++pick[j - 1];
        for (std::size_t m = j; m < size; ++m) {
            pick[m] = pick[m - 1] + 1;
        }
    }
}

nlohmann::ordered_json to_json(const ResolveVerdict& verdict) {
    nlohmann::ordered_json doc;
    doc["resolving"] = verdict.resolving();
    if (verdict.witness) {
        doc["witness"] = {{"e1", to_string(verdict.witness->first)}, {"e2", to_string(verdict.witness->second)}};
    }
    return doc;
}

ResolveVerdict verdict_from_json(const GPGraph& g, const nlohmann::json& doc) {
    ResolveVerdict verdict;
    const bool resolving = doc.at("resolving").get<bool>();
    if (doc.contains("witness")) {
        const auto& w = doc.at("witness");
        verdict.witness = std::pair{parse_edge(g, w.at("e1").get<std::string>()), parse_edge(g, w.at("e2").get<std::string>())};
    }
    if (resolving == verdict.witness.has_value()) {
        throw DomainError("verdict JSON: 'resolving' contradicts the presence of a witness");
    }
    return verdict;
}

bool EqualPairSet::contains(Index i) const { return std::binary_search(indices.begin(), indices.end(), i); }

EqualPairSet equal_pair_set_closed(const ResidueContext& ctx, PairLayer layer, Index t) {
    if (ctx.n < kEqualPairClosedMinN) {
        throw UnsupportedRange("closed equal-pair sets need n >= 100, got n = " + std::to_string(ctx.n));
    }
    const Index n = ctx.n;
    std::set<Index> members;
    const Index start = layer == PairLayer::A ? 5 : 0;
    for (Index i = start; 2 * i < n; ++i) {
        if (i % 3 != 1) {
            members.insert(mod(i + t, n));
            members.insert(mod(-i + t, n));
        }
    }
    if (layer == PairLayer::A) {
        members.insert(mod(t, n));
    }
    if (n % 2 == 0) {
        members.insert(mod(n / 2 + t, n));
    }
    return {layer, mod(t, n), std::vector<Index>(members.begin(), members.end())};
}

EqualPairSet equal_pair_set_brute(const GPGraph& g, PairLayer layer, Index t) {
    return equal_pair_set_brute(DistanceTable(g), layer, t);
}

EqualPairSet equal_pair_set_brute(const DistanceTable& table, PairLayer layer, Index t) {
    const GPGraph& g = table.graph();
    const Vertex anchor = layer == PairLayer::A ? g.u(t) : g.v(t);
    EqualPairSet out{layer, mod(t, g.n()), {}};
    for (Index i = 0; i < g.n(); ++i) {
        if (table.at(anchor, g.outer(i - 1)) == table.at(anchor, g.outer(i))) {
            out.indices.push_back(i);
        }
    }
    return out;
}

LandmarkList table_tetrad(Index n) {
    if (n < kTetradTableMinN) {
        throw UnsupportedRange("the residue-keyed tetrad is defined for n >= 19, got n = " + std::to_string(n));
    }
    const GPGraph g = GPGraph::build(n, 3);
    const Index half = n / 2;
    switch (n % 6) {
    case 2:
        return {g.u(0), g.u(1), g.u(half - 3), g.v(half - 2)};
    case 4:
        return {g.u(0), g.u(1), g.v(2), g.u(half + 3)};
    case 5:
        return {g.u(0), g.u(1), g.u(half - 1), g.v(half)};
    default:
        return {g.u(0), g.u(1), g.v(2), g.u(half - 1)};
    }
}

LandmarkList resolving_tetrad(Index n) {
    if (n < kTetradMinN) {
        throw UnsupportedRange("P(n,3) has no edge-dimension-4 construction below n = 11, got n = " +
                               std::to_string(n));
    }
    const DistanceTable table(GPGraph::build(n, 3));
    if (n >= kTetradTableMinN) {
        LandmarkList tetrad = table_tetrad(n);
        const ResolveVerdict verdict = is_edge_resolving(table, tetrad);
        if (!verdict.resolving()) {
            throw ConsistencyError("tetrad " + tetrad.to_string() + " does not resolve P(" + std::to_string(n) +
                                   ",3): " + to_string(verdict.witness->first) + " ~ " +
                                   to_string(verdict.witness->second));
        }
        return tetrad;
    }
    // C(36, 4) = 58905 at n = 18.
    auto found = least_resolving_subset(table, 4, 100000);
    if (!found) {
        throw ConsistencyError("no resolving tetrad exists for P(" + std::to_string(n) + ",3)");
    }
    return *found;
}

} // namespace gpedim
