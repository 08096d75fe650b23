#include "gpedim/graph.hpp"

#include <charconv>
#include <sstream>

#include "gpedim/errors.hpp"

namespace gpedim {

GPGraph GPGraph::build(Index n, Index k) {
    if (n < 3) {
        throw DomainError("P(n,k) requires n >= 3, got n = " + std::to_string(n));
    }
    if (k < 1 || 2 * k >= n) {
        std::ostringstream msg;
        msg << "P(n,k) requires 1 <= k < n/2, got n = " << n << ", k = " << k;
        throw DomainError(msg.str());
    }
    return GPGraph(n, k);
}

Vertex GPGraph::vertex_at(Index id) const {
    if (id < 0 || id >= 2 * n_) {
        throw DomainError("vertex id out of range: " + std::to_string(id));
    }
    return id < n_ ? Vertex{Layer::Outer, id} : Vertex{Layer::Inner, id - n_};
}

Edge GPGraph::edge_at(Index id) const {
    if (id < 0 || id >= 3 * n_) {
        throw DomainError("edge id out of range: " + std::to_string(id));
    }
    return Edge{static_cast<EdgeKind>(id / n_), id % n_};
}

std::pair<Vertex, Vertex> GPGraph::incident_vertices(const Edge& e) const {
    const Index i = mod(e.index, n_);
    switch (e.kind) {
    case EdgeKind::OuterArc:
        return {u(i), u(i + 1)};
    case EdgeKind::InnerArc:
        return {v(i), v(i + k_)};
    case EdgeKind::Spoke:
        break;
    }
    return {u(i), v(i)};
}

std::array<Vertex, 3> GPGraph::adjacent_vertices(const Vertex& x) const {
    const Index i = x.index;
    if (x.layer == Layer::Outer) {
        return {u(i - 1), u(i + 1), v(i)};
    }
    return {v(i - k_), v(i + k_), u(i)};
}

std::array<Index, 3> GPGraph::adjacent_ids(Index id) const {
    if (id < n_) {
        return {id == 0 ? n_ - 1 : id - 1, id + 1 == n_ ? 0 : id + 1, id + n_};
    }
    const Index i = id - n_;
    return {n_ + mod(i - k_, n_), n_ + mod(i + k_, n_), i};
}

std::vector<Vertex> GPGraph::vertices() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(2 * n_));
    for (Index id = 0; id < 2 * n_; ++id) {
        out.push_back(vertex_at(id));
    }
    return out;
}

std::vector<Edge> GPGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(3 * n_));
    for (Index id = 0; id < 3 * n_; ++id) {
        out.push_back(edge_at(id));
    }
    return out;
}

std::string to_string(Layer layer) { return layer == Layer::Outer ? "u" : "v"; }

std::string to_string(EdgeKind kind) {
    switch (kind) {
    case EdgeKind::OuterArc:
        return "outer";
    case EdgeKind::Spoke:
        return "spoke";
    case EdgeKind::InnerArc:
        return "inner";
    }
    return "?";
}

std::string to_string(const Vertex& x) { return to_string(x.layer) + std::to_string(x.index); }

std::string to_string(const Edge& e) {
    const char* prefix = e.kind == EdgeKind::OuterArc ? "u:" : e.kind == EdgeKind::Spoke ? "s:" : "v:";
    return prefix + std::to_string(e.index);
}

namespace {

Index parse_index(std::string_view digits, std::string_view whole) {
    Index value = 0;
    const char* first = digits.data();
    const char* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (digits.empty() || ec != std::errc{} || ptr != last) {
        throw DomainError("malformed index in '" + std::string(whole) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Vertex parse_vertex(const GPGraph& g, std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || (text[0] != 'u' && text[0] != 'v')) {
        throw DomainError("expected a vertex like u0 or v12, got '" + std::string(text) + "'");
    }
    const Index i = parse_index(text.substr(1), text);
    return text[0] == 'u' ? g.u(i) : g.v(i);
}

Edge parse_edge(const GPGraph& g, std::string_view text) {
    text = trim(text);
    if (text.size() < 3 || text[1] != ':') {
        throw DomainError("expected an edge like u:5, v:7 or s:0, got '" + std::string(text) + "'");
    }
    const Index i = parse_index(text.substr(2), text);
    switch (text[0]) {
    case 'u':
        return g.outer(i);
    case 'v':
        return g.inner(i);
    case 's':
        return g.spoke(i);
    default:
        throw DomainError("unknown edge kind in '" + std::string(text) + "'");
    }
}

std::vector<Vertex> parse_vertex_list(const GPGraph& g, std::string_view text) {
    std::vector<Vertex> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        out.push_back(parse_vertex(g, text.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace gpedim
