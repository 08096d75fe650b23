#ifndef GPEDIM_RESOLVING_HPP
#define GPEDIM_RESOLVING_HPP

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpedim/distance.hpp"
#include "gpedim/graph.hpp"
#include "gpedim/residue.hpp"

namespace gpedim {

/// Ordered, duplicate-free, nonempty list of landmark vertices.
class LandmarkList {
public:
    LandmarkList(std::vector<Vertex> vertices);
    LandmarkList(std::initializer_list<Vertex> vertices) : LandmarkList(std::vector<Vertex>(vertices)) {}

    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Vertex& operator[](std::size_t i) const { return vertices_[i]; }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    std::string to_string() const;

    friend bool operator==(const LandmarkList&, const LandmarkList&) = default;

private:
    std::vector<Vertex> vertices_;
};

struct EdgeRepr {
    std::vector<Index> distances;

    friend auto operator<=>(const EdgeRepr&, const EdgeRepr&) = default;
};

/// (d(e, x_1), ..., d(e, x_k)) through the distance dispatcher.
EdgeRepr edge_representation(const GPGraph& g, const LandmarkList& landmarks, const Edge& e);
EdgeRepr edge_representation(const DistanceTable& table, const LandmarkList& landmarks, const Edge& e);

/// Equal representations for the two edges.
bool same_representation(const DistanceTable& table, const LandmarkList& landmarks, const Edge& a, const Edge& b);

struct ResolveVerdict {
    /// Lexicographically least pair (first < second) of distinct edges with equal
    /// representations, ordered by (kind, index) with e^u < e^s < e^v.
    std::optional<std::pair<Edge, Edge>> witness;

    bool resolving() const { return !witness.has_value(); }
};

ResolveVerdict is_edge_resolving(const GPGraph& g, const LandmarkList& landmarks);
ResolveVerdict is_edge_resolving(const DistanceTable& table, const LandmarkList& landmarks);

/// First k-subset of vertex ids, in lexicographic order, that resolves every edge pair.
/// `budget` caps the number of subsets examined; BudgetExceeded is thrown past it.
std::optional<LandmarkList> least_resolving_subset(const DistanceTable& table, std::size_t size,
                                                   std::uint64_t budget);

/// {"resolving": bool, "witness": {"e1": "u:3", "e2": "s:4"}} (witness only when confused).
nlohmann::ordered_json to_json(const ResolveVerdict& verdict);
ResolveVerdict verdict_from_json(const GPGraph& g, const nlohmann::json& doc);

/// A: anchor u_t; B: anchor v_t.
enum class PairLayer { A, B };

/// Indices i with d(w_t, e^u_{i-1}) = d(w_t, e^u_i), w = u for A and v for B.
struct EqualPairSet {
    PairLayer layer = PairLayer::A;
    Index t = 0;
    std::vector<Index> indices; ///< sorted, reduced modulo n

    bool contains(Index i) const;
    friend bool operator==(const EqualPairSet&, const EqualPairSet&) = default;
};

inline constexpr Index kEqualPairClosedMinN = 100;

/// Closed description of the set for n >= 100 (UnsupportedRange below):
/// A_0 = {+-i : 5 <= i < n/2, i != 1 mod 3} + {0} (+ {n/2} if n even),
/// B_0 = {+-i : 0 <= i < n/2, i != 1 mod 3} (+ {n/2} if n even), shifted by t.
EqualPairSet equal_pair_set_closed(const ResidueContext& ctx, PairLayer layer, Index t);

/// Same set computed from distances; valid for every P(n,k).
EqualPairSet equal_pair_set_brute(const GPGraph& g, PairLayer layer, Index t);
EqualPairSet equal_pair_set_brute(const DistanceTable& table, PairLayer layer, Index t);

inline constexpr Index kTetradMinN = 11;
inline constexpr Index kTetradTableMinN = 19;

/// (u_0, u_1, x, y) from the residue-keyed construction for n >= 19, or the lexicographically
/// least resolving 4-subset of vertex ids for 11 <= n <= 18. The result is verified before
/// it is returned. Throws UnsupportedRange for n < 11.
LandmarkList resolving_tetrad(Index n);

/// The residue-keyed pair {x, y} alone, without verification (n >= 19).
LandmarkList table_tetrad(Index n);

} // namespace gpedim

#endif
