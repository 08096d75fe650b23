#include "gpedim/distance.hpp"

#include "gpedim/bfs.hpp"
#include "gpedim/closed_form.hpp"
#include "gpedim/errors.hpp"

namespace gpedim {

bool closed_form_applies(const GPGraph& g) { return g.k() == 3 && g.n() >= kClosedFormMinN; }

Index distance(const GPGraph& g, const Vertex& x, const Edge& e) {
    if (!g.contains(x) || !g.contains(e)) {
        throw DomainError("distance: vertex or edge index is not reduced modulo n");
    }
    if (closed_form_applies(g)) {
        return closed_ve(ResidueContext::of(g.n()), x, e);
    }
    return bfs_vertex_edge_distance(g, x, e);
}

Index vertex_distance(const GPGraph& g, const Vertex& x, const Vertex& y) {
    if (!g.contains(x) || !g.contains(y)) {
        throw DomainError("vertex_distance: vertex index is not reduced modulo n");
    }
    if (closed_form_applies(g)) {
        const Anchor anchor = x.layer == Layer::Outer ? Anchor::U0 : Anchor::V0;
        return closed_vv(ResidueContext::of(g.n()), anchor, g.translate(y, -x.index));
    }
    return bfs_vertex_distance(g, x, y);
}

DistanceTable::DistanceTable(const GPGraph& g) : g_(g), closed_(closed_form_applies(g)) {
    if (closed_) {
        const ResidueContext ctx = ResidueContext::of(g.n());
        from_u0_.resize(static_cast<std::size_t>(g.edge_count()));
        from_v0_.resize(static_cast<std::size_t>(g.edge_count()));
        for (Index id = 0; id < g.edge_count(); ++id) {
            const Edge e = g.edge_at(id);
            from_u0_[id] = closed_ve(ctx, g.u(0), e);
            from_v0_[id] = closed_ve(ctx, g.v(0), e);
        }
    } else {
        from_u0_ = bfs_edge_distances(g, g.u(0));
        from_v0_ = bfs_edge_distances(g, g.v(0));
    }
}

} // namespace gpedim
