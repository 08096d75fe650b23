#ifndef GPEDIM_GRAPH_HPP
#define GPEDIM_GRAPH_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpedim {

using Index = std::int64_t;

/// Least nonnegative residue of i modulo n (n > 0).
constexpr Index mod(Index i, Index n) {
    Index r = i % n;
    return r < 0 ? r + n : r;
}

enum class Layer : std::uint8_t { Outer = 0, Inner = 1 };

/// Declared in the order used for every edge comparison: e^u < e^s < e^v.
enum class EdgeKind : std::uint8_t { OuterArc = 0, Spoke = 1, InnerArc = 2 };

struct Vertex {
    Layer layer = Layer::Outer;
    Index index = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Edge {
    EdgeKind kind = EdgeKind::OuterArc;
    Index index = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The generalized Petersen graph P(n,k). Adjacency is arithmetic; nothing is stored
/// beyond the two parameters, so the value is cheap to copy and share across threads.
///
/// Vertex ids are dense: u_i -> i, v_i -> n + i. Edge ids: e^u_i -> i, e^s_i -> n + i,
/// e^v_i -> 2n + i, which matches the EdgeKind ordering.
class GPGraph {
public:
    /// Throws DomainError unless n >= 3 and 1 <= k < n/2.
    static GPGraph build(Index n, Index k);

    Index n() const { return n_; }
    Index k() const { return k_; }
    Index vertex_count() const { return 2 * n_; }
    Index edge_count() const { return 3 * n_; }

    // Constructors for vertices and edges reduce any integer index modulo n.
    Vertex u(Index i) const { return {Layer::Outer, mod(i, n_)}; }
    Vertex v(Index i) const { return {Layer::Inner, mod(i, n_)}; }
    Vertex vertex(Layer layer, Index i) const { return {layer, mod(i, n_)}; }
    Edge outer(Index i) const { return {EdgeKind::OuterArc, mod(i, n_)}; }
    Edge spoke(Index i) const { return {EdgeKind::Spoke, mod(i, n_)}; }
    Edge inner(Index i) const { return {EdgeKind::InnerArc, mod(i, n_)}; }
    Edge edge(EdgeKind kind, Index i) const { return {kind, mod(i, n_)}; }

    bool contains(const Vertex& x) const { return x.index >= 0 && x.index < n_; }
    bool contains(const Edge& e) const { return e.index >= 0 && e.index < n_; }

    Index id(const Vertex& x) const { return static_cast<Index>(x.layer) * n_ + x.index; }
    Index id(const Edge& e) const { return static_cast<Index>(e.kind) * n_ + e.index; }
    Vertex vertex_at(Index id) const;
    Edge edge_at(Index id) const;

    /// Endpoints of e: (u_i, u_{i+1}), (v_i, v_{i+k}) or (u_i, v_i).
    std::pair<Vertex, Vertex> incident_vertices(const Edge& e) const;

    /// Neighbors in a fixed order: same-layer predecessor, same-layer successor, spoke partner.
    /// For u_i that is (u_{i-1}, u_{i+1}, v_i); for v_i it is (v_{i-k}, v_{i+k}, u_i).
    std::array<Vertex, 3> adjacent_vertices(const Vertex& x) const;

    /// Same neighbors as adjacent_vertices, as dense ids.
    std::array<Index, 3> adjacent_ids(Index id) const;

    /// All vertices ordered by id.
    std::vector<Vertex> vertices() const;
    /// All edges ordered by id (outer arcs, then spokes, then inner arcs).
    std::vector<Edge> edges() const;

    /// Translation automorphism w_i -> w_{i+t}.
    Vertex translate(const Vertex& x, Index t) const { return {x.layer, mod(x.index + t, n_)}; }
    Edge translate(const Edge& e, Index t) const { return {e.kind, mod(e.index + t, n_)}; }

    friend bool operator==(const GPGraph&, const GPGraph&) = default;

private:
    GPGraph(Index n, Index k) : n_(n), k_(k) {}

    Index n_;
    Index k_;
};

// Textual names: vertices "u3", "v12"; edges "u:5", "v:7", "s:0".
std::string to_string(const Vertex& x);
std::string to_string(const Edge& e);
std::string to_string(Layer layer);
std::string to_string(EdgeKind kind);

/// Parses "u<i>" / "v<i>"; negative indices ("u-5") are reduced modulo n.
Vertex parse_vertex(const GPGraph& g, std::string_view text);
/// Parses "u:<i>" / "v:<i>" / "s:<i>"; negative indices are reduced modulo n.
Edge parse_edge(const GPGraph& g, std::string_view text);
/// Comma-separated vertex list, e.g. "u0,u1,v3".
std::vector<Vertex> parse_vertex_list(const GPGraph& g, std::string_view text);

} // namespace gpedim

#endif
