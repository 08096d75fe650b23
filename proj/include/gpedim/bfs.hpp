#ifndef GPEDIM_BFS_HPP
#define GPEDIM_BFS_HPP

#include <optional>
#include <vector>

#include "gpedim/graph.hpp"

namespace gpedim {

/// Breadth-first ground truth. These never consult a closed form.

inline constexpr Index kUnreachable = -1;

Index bfs_vertex_distance(const GPGraph& g, const Vertex& x, const Vertex& y);

/// min(d(x, a), d(x, b)) for e = ab; stops at whichever endpoint is reached first.
Index bfs_vertex_edge_distance(const GPGraph& g, const Vertex& x, const Edge& e);

/// Single-source distances indexed by vertex id.
std::vector<Index> bfs_distances(const GPGraph& g, const Vertex& source);

/// Edge distances from source indexed by edge id, derived from one bfs_distances sweep.
std::vector<Index> bfs_edge_distances(const GPGraph& g, const Vertex& source);

/// Clockwise steps are u_j -> u_{j+1} and v_j -> v_{j+k}; spokes may be used in either
/// direction under both orientations.
enum class Orientation { Clockwise, Counterclockwise };

/// Shortest length over paths whose cycle steps all follow `o`. Requires k = 3.
/// Returns nullopt if the restricted search exhausts without reaching y.
std::optional<Index> directional_distance(const GPGraph& g, const Vertex& x, const Vertex& y, Orientation o);

/// Restricted single-source search. With max_spokes set, only paths using at most that many
/// spokes count. Unreached vertices hold kUnreachable. Requires k = 3.
std::vector<Index> directional_distances(const GPGraph& g, const Vertex& source, Orientation o,
                                         std::optional<int> max_spokes = std::nullopt);

} // namespace gpedim

#endif
