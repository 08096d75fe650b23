#include "gpedim/graph_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "gpedim/errors.hpp"

namespace gpedim {

namespace {

std::string dot_export(const GPGraph& g) {
    std::ostringstream out;
    out << "graph \"P(" << g.n() << "," << g.k() << ")\" {\n";
    for (const Vertex& x : g.vertices()) {
        out << "  " << to_string(x) << ";\n";
    }
    for (const Edge& e : g.edges()) {
        const auto [a, b] = g.incident_vertices(e);
        out << "  " << to_string(a) << " -- " << to_string(b) << " [kind=" << to_string(e.kind)
            << ", index=" << e.index << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string json_export(const GPGraph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.n();
    doc["k"] = g.k();
    auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
    for (const Vertex& x : g.vertices()) {
        vertices.push_back(to_string(x));
    }
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({{"kind", to_string(e.kind)}, {"index", e.index}});
    }
    return doc.dump(2) + "\n";
}

EdgeKind kind_from_name(const std::string& name) {
    if (name == "outer") {
        return EdgeKind::OuterArc;
    }
    if (name == "spoke") {
        return EdgeKind::Spoke;
    }
    if (name == "inner") {
        return EdgeKind::InnerArc;
    }
    throw DomainError("unknown edge kind '" + name + "'");
}

} // namespace

std::string export_graph(const GPGraph& g, ExportFormat format) {
    return format == ExportFormat::Dot ? dot_export(g) : json_export(g);
}

GPGraph parse_graph_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw DomainError(std::string("graph JSON does not parse: ") + err.what());
    }
    if (!doc.contains("n") || !doc.contains("k")) {
        throw DomainError("graph JSON needs integer fields n and k");
    }
    const GPGraph g = GPGraph::build(doc.at("n").get<Index>(), doc.at("k").get<Index>());

    if (doc.contains("vertices")) {
        const auto& vs = doc.at("vertices");
        if (!vs.is_array() || static_cast<Index>(vs.size()) != g.vertex_count()) {
            throw DomainError("graph JSON vertex list does not match 2n");
        }
        for (std::size_t id = 0; id < vs.size(); ++id) {
            if (parse_vertex(g, vs[id].get<std::string>()) != g.vertex_at(static_cast<Index>(id))) {
                throw DomainError("graph JSON vertex list is not in canonical order");
            }
        }
    }
    if (doc.contains("edges")) {
        const auto& es = doc.at("edges");
        if (!es.is_array() || static_cast<Index>(es.size()) != g.edge_count()) {
            throw DomainError("graph JSON edge list does not match 3n");
        }
        for (std::size_t id = 0; id < es.size(); ++id) {
            const Edge e{kind_from_name(es[id].at("kind").get<std::string>()), es[id].at("index").get<Index>()};
            if (e != g.edge_at(static_cast<Index>(id))) {
                throw DomainError("graph JSON edge list is not in canonical order");
            }
        }
    }
    return g;
}

} // namespace gpedim
