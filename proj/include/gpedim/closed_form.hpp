#ifndef GPEDIM_CLOSED_FORM_HPP
#define GPEDIM_CLOSED_FORM_HPP

#include "gpedim/graph.hpp"
#include "gpedim/residue.hpp"

namespace gpedim {

/// Closed-form distances in P(n,3). Both functions throw UnsupportedRange for n < 13,
/// the smallest n for which the vertex-edge case analysis is claimed.

inline constexpr Index kClosedFormMinN = 13;

enum class Anchor { U0, V0 };

/// d(u_0, target) or d(v_0, target). Indices above floor(n/2) are folded by the reflection
/// w_i -> w_{-i}; d(v_0, u_i) is evaluated as d(u_0, v_i).
Index closed_vv(const ResidueContext& ctx, Anchor anchor, const Vertex& target);

/// d(anchor, e) for any anchor: the anchor is translated to index 0 first, the edge with it.
Index closed_ve(const ResidueContext& ctx, const Vertex& anchor, const Edge& e);

} // namespace gpedim

#endif
