#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "gpedim/errors.hpp"
#include "gpedim/graph.hpp"
#include "gpedim/graph_io.hpp"

using namespace gpedim;

TEST_CASE("build validates the parameter domain") {
    const GPGraph p83 = GPGraph::build(8, 3);
    CHECK(p83.vertex_count() == 16);
    CHECK(p83.edge_count() == 24);

    const GPGraph petersen = GPGraph::build(5, 2);
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);

    CHECK_THROWS_AS(GPGraph::build(6, 3), DomainError);
    CHECK_THROWS_AS(GPGraph::build(2, 1), DomainError);
    CHECK_THROWS_AS(GPGraph::build(10, 0), DomainError);
    CHECK_NOTHROW(GPGraph::build(7, 3));
}

TEST_CASE("incident vertices wrap around") {
    const GPGraph g = GPGraph::build(8, 3);
    CHECK(g.incident_vertices(g.outer(7)) == std::pair{g.u(7), g.u(0)});
    CHECK(g.incident_vertices(g.inner(6)) == std::pair{g.v(6), g.v(1)});
    const GPGraph g20 = GPGraph::build(20, 3);
    CHECK(g20.incident_vertices(g20.spoke(4)) == std::pair{g20.u(4), g20.v(4)});
}

TEST_CASE("adjacency order is predecessor, successor, spoke partner") {
    const GPGraph g = GPGraph::build(8, 3);
    CHECK(g.adjacent_vertices(g.u(0)) == std::array{g.u(7), g.u(1), g.v(0)});
    CHECK(g.adjacent_vertices(g.v(0)) == std::array{g.v(5), g.v(3), g.u(0)});
    const GPGraph g20 = GPGraph::build(20, 3);
    CHECK(g20.adjacent_vertices(g20.v(19)) == std::array{g20.v(16), g20.v(2), g20.u(19)});
}

TEST_CASE("indices are reduced on entry") {
    const GPGraph g = GPGraph::build(11, 3);
    CHECK(g.outer(-5) == g.outer(6));
    CHECK(g.outer(3 + 11) == g.outer(3));
    CHECK(g.v(-1).index == 10);
    CHECK(parse_edge(g, "u:-5") == g.outer(6));
    CHECK(parse_vertex(g, "v12") == g.v(1));
    CHECK_THROWS_AS(parse_vertex(g, "w3"), DomainError);
    CHECK_THROWS_AS(parse_edge(g, "x:3"), DomainError);
    CHECK_THROWS_AS(parse_edge(g, "u5"), DomainError);
    CHECK_THROWS_AS(parse_vertex(g, "u"), DomainError);
    CHECK(parse_vertex_list(g, "u0, u1,v3") == std::vector{g.u(0), g.u(1), g.v(3)});
}

TEST_CASE("counts, degrees and incidence/adjacency consistency") {
    for (Index n = 3; n <= 40; ++n) {
        for (Index k = 1; 2 * k < n; ++k) {
            const GPGraph g = GPGraph::build(n, k);
            REQUIRE(static_cast<Index>(g.vertices().size()) == 2 * n);
            REQUIRE(static_cast<Index>(g.edges().size()) == 3 * n);

            std::set<std::pair<Index, Index>> from_edges;
            std::map<Index, int> degree;
            for (const Edge& e : g.edges()) {
                const auto [a, b] = g.incident_vertices(e);
                REQUIRE(a != b);
                from_edges.insert(std::minmax(g.id(a), g.id(b)));
                ++degree[g.id(a)];
                ++degree[g.id(b)];
            }
            // No two edges share both endpoints.
            REQUIRE(static_cast<Index>(from_edges.size()) == 3 * n);

            std::set<std::pair<Index, Index>> from_adjacency;
            for (const Vertex& x : g.vertices()) {
                REQUIRE(degree[g.id(x)] == 3);
                const auto nbrs = g.adjacent_vertices(x);
                const auto ids = g.adjacent_ids(g.id(x));
                for (std::size_t j = 0; j < 3; ++j) {
                    REQUIRE(g.id(nbrs[j]) == ids[j]);
                    from_adjacency.insert(std::minmax(g.id(x), ids[j]));
                }
            }
            REQUIRE(from_adjacency == from_edges);
        }
    }
}

TEST_CASE("id round trip and edge ordering") {
    const GPGraph g = GPGraph::build(13, 3);
    for (Index id = 0; id < g.edge_count(); ++id) {
        CHECK(g.id(g.edge_at(id)) == id);
    }
    for (Index id = 0; id < g.vertex_count(); ++id) {
        CHECK(g.id(g.vertex_at(id)) == id);
    }
    CHECK(g.outer(12) < g.spoke(0));
    CHECK(g.spoke(12) < g.inner(0));
    CHECK_THROWS_AS(g.edge_at(39), DomainError);
}

TEST_CASE("DOT export has one line per vertex and per edge") {
    const GPGraph g = GPGraph::build(5, 2);
    const std::string dot = export_graph(g, ExportFormat::Dot);
    std::istringstream lines(dot);
    std::string line;
    int nodes = 0;
    int edges = 0;
    while (std::getline(lines, line)) {
        if (line.find(" -- ") != std::string::npos) {
            ++edges;
        } else if (line.size() > 2 && (line[2] == 'u' || line[2] == 'v')) {
            ++nodes;
        }
    }
    CHECK(nodes == 10);
    CHECK(edges == 15);
    CHECK(dot.find("  u4 -- u0 [kind=outer, index=4];") != std::string::npos);
    CHECK(dot.find("  v3 -- v0 [kind=inner, index=3];") != std::string::npos);
}

TEST_CASE("JSON export schema and round trip") {
    const GPGraph g83 = GPGraph::build(8, 3);
    const auto doc = nlohmann::json::parse(export_graph(g83, ExportFormat::Json));
    CHECK(doc["n"] == 8);
    CHECK(doc["k"] == 3);
    CHECK(doc["edges"].size() == 24);
    CHECK(doc["vertices"].size() == 16);
    CHECK(doc["edges"][0]["kind"] == "outer");
    CHECK(doc["edges"][8]["kind"] == "spoke");
    CHECK(doc["edges"][16]["kind"] == "inner");

    const GPGraph g = GPGraph::build(11, 3);
    CHECK(parse_graph_json(export_graph(g, ExportFormat::Json)) == g);

    CHECK_THROWS_AS(parse_graph_json("{\"n\": 6, \"k\": 3}"), DomainError);
    CHECK_THROWS_AS(parse_graph_json("not json"), DomainError);
    auto broken = nlohmann::json::parse(export_graph(g, ExportFormat::Json));
    broken["edges"].erase(broken["edges"].begin());
    CHECK_THROWS_AS(parse_graph_json(broken.dump()), DomainError);
}
