#ifndef GPEDIM_DISTANCE_HPP
#define GPEDIM_DISTANCE_HPP

#include <vector>

#include "gpedim/graph.hpp"
#include "gpedim/residue.hpp"

namespace gpedim {

/// True when P(n,k) is covered by the closed forms (k = 3, n >= 13).
bool closed_form_applies(const GPGraph& g);

/// d(x, e). Closed form when closed_form_applies(g), BFS otherwise; the answers are identical.
Index distance(const GPGraph& g, const Vertex& x, const Edge& e);

/// d(x, y), dispatched the same way (x is translated to index 0 before the closed form).
Index vertex_distance(const GPGraph& g, const Vertex& x, const Vertex& y);

/// All vertex-edge distances of a graph, stored as the two rows d(u_0, .) and d(v_0, .).
/// Every other anchor is served by the translation automorphism w_i -> w_{i-t}, which holds
/// in every P(n,k). Memory is 6n entries.
class DistanceTable {
public:
    explicit DistanceTable(const GPGraph& g);

    const GPGraph& graph() const { return g_; }
    bool from_closed_form() const { return closed_; }

    Index at(const Vertex& x, const Edge& e) const {
        const std::vector<Index>& row = x.layer == Layer::Outer ? from_u0_ : from_v0_;
        return row[static_cast<std::size_t>(static_cast<Index>(e.kind) * g_.n() + mod(e.index - x.index, g_.n()))];
    }

private:
    GPGraph g_;
    bool closed_;
    std::vector<Index> from_u0_;
    std::vector<Index> from_v0_;
};

} // namespace gpedim

#endif
