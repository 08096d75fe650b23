#include "gpedim/bfs.hpp"

#include <algorithm>

#include "gpedim/errors.hpp"

namespace gpedim {

namespace {

void require_member(const GPGraph& g, const Vertex& x) {
    if (!g.contains(x)) {
        throw DomainError("vertex " + to_string(x) + " is not in P(" + std::to_string(g.n()) + "," +
                          std::to_string(g.k()) + ")");
    }
}

void require_member(const GPGraph& g, const Edge& e) {
    if (!g.contains(e)) {
        throw DomainError("edge " + to_string(e) + " is not in P(" + std::to_string(g.n()) + "," +
                          std::to_string(g.k()) + ")");
    }
}

// Flat-frontier BFS; stops as soon as any id in `targets` is dequeued.
template <std::size_t N>
Index bfs_until(const GPGraph& g, Index source, const std::array<Index, N>& targets) {
    std::vector<Index> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    std::vector<Index> queue;
    queue.reserve(dist.size());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Index cur = queue[head];
        if (std::find(targets.begin(), targets.end(), cur) != targets.end()) {
            return dist[cur];
        }
        for (Index next : g.adjacent_ids(cur)) {
            if (dist[next] == kUnreachable) {
                dist[next] = dist[cur] + 1;
                queue.push_back(next);
            }
        }
    }
    return kUnreachable;
}

// Successor of `id` along the orientation within its cycle.
Index directed_step(const GPGraph& g, Index id, Orientation o) {
    const Index n = g.n();
    const Index sign = o == Orientation::Clockwise ? 1 : -1;
    if (id < n) {
        return mod(id + sign, n);
    }
    return n + mod(id - n + sign * g.k(), n);
}

Index spoke_partner(const GPGraph& g, Index id) { return id < g.n() ? id + g.n() : id - g.n(); }

void require_k3(const GPGraph& g) {
    if (g.k() != 3) {
        throw DomainError("directional distances are defined here for P(n,3) only");
    }
}

} // namespace

Index bfs_vertex_distance(const GPGraph& g, const Vertex& x, const Vertex& y) {
    require_member(g, x);
    require_member(g, y);
    return bfs_until(g, g.id(x), std::array<Index, 1>{g.id(y)});
}

Index bfs_vertex_edge_distance(const GPGraph& g, const Vertex& x, const Edge& e) {
    require_member(g, x);
    require_member(g, e);
    const auto [a, b] = g.incident_vertices(e);
    return bfs_until(g, g.id(x), std::array<Index, 2>{g.id(a), g.id(b)});
}

std::vector<Index> bfs_distances(const GPGraph& g, const Vertex& source) {
    require_member(g, source);
    std::vector<Index> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    std::vector<Index> queue;
    queue.reserve(dist.size());
    dist[g.id(source)] = 0;
    queue.push_back(g.id(source));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Index cur = queue[head];
        for (Index next : g.adjacent_ids(cur)) {
            if (dist[next] == kUnreachable) {
                dist[next] = dist[cur] + 1;
                queue.push_back(next);
            }
        }
    }
    return dist;
}

std::vector<Index> bfs_edge_distances(const GPGraph& g, const Vertex& source) {
    const std::vector<Index> dist = bfs_distances(g, source);
    std::vector<Index> out(static_cast<std::size_t>(g.edge_count()));
    for (Index id = 0; id < g.edge_count(); ++id) {
        const auto [a, b] = g.incident_vertices(g.edge_at(id));
        out[id] = std::min(dist[g.id(a)], dist[g.id(b)]);
    }
    return out;
}

std::vector<Index> directional_distances(const GPGraph& g, const Vertex& source, Orientation o,
                                         std::optional<int> max_spokes) {
    require_k3(g);
    require_member(g, source);
    const Index vcount = g.vertex_count();
    // Without a cap the spoke counter is irrelevant; collapse it to a single layer.
    const int layers = max_spokes ? *max_spokes + 1 : 1;
    std::vector<Index> dist(static_cast<std::size_t>(vcount * layers), kUnreachable);
    std::vector<Index> queue;
    queue.reserve(dist.size());
    const auto state = [&](Index id, int spokes) { return static_cast<Index>(spokes) * vcount + id; };

    dist[state(g.id(source), 0)] = 0;
    queue.push_back(state(g.id(source), 0));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Index s = queue[head];
        const Index id = s % vcount;
        const int spokes = static_cast<int>(s / vcount);
        const Index along = state(directed_step(g, id, o), spokes);
        if (dist[along] == kUnreachable) {
            dist[along] = dist[s] + 1;
            queue.push_back(along);
        }
        const int next_spokes = max_spokes ? spokes + 1 : 0;
        if (next_spokes < layers) {
            const Index across = state(spoke_partner(g, id), next_spokes);
            if (dist[across] == kUnreachable) {
                dist[across] = dist[s] + 1;
                queue.push_back(across);
            }
        }
    }

    std::vector<Index> out(static_cast<std::size_t>(vcount), kUnreachable);
    for (Index id = 0; id < vcount; ++id) {
        for (int layer = 0; layer < layers; ++layer) {
            const Index d = dist[state(id, layer)];
            if (d != kUnreachable && (out[id] == kUnreachable || d < out[id])) {
                out[id] = d;
            }
        }
    }
    return out;
}

std::optional<Index> directional_distance(const GPGraph& g, const Vertex& x, const Vertex& y, Orientation o) {
    require_member(g, y);
    const Index d = directional_distances(g, x, o)[g.id(y)];
    if (d == kUnreachable) {
        return std::nullopt;
    }
    return d;
}

} // namespace gpedim
