#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gpedim/errors.hpp"
#include "gpedim/resolving.hpp"

using namespace gpedim;

TEST_CASE("landmark lists reject duplicates and empties") {
    const GPGraph g = GPGraph::build(8, 3);
    CHECK_THROWS_AS(LandmarkList({g.u(0), g.u(0)}), DomainError);
    CHECK_THROWS_AS(LandmarkList(std::vector<Vertex>{}), DomainError);
    CHECK(LandmarkList({g.u(0), g.v(3)}).to_string() == "u0,v3");
    CHECK_THROWS_AS(is_edge_resolving(g, LandmarkList({Vertex{Layer::Outer, 9}})), DomainError);
}

TEST_CASE("edge representations") {
    // (0,0,1,2) was computed with networkx before being frozen here.
    const GPGraph g8 = GPGraph::build(8, 3);
    const LandmarkList fig{g8.u(0), g8.u(1), g8.u(2), g8.v(3)};
    CHECK(edge_representation(g8, fig, g8.outer(0)).distances == std::vector<Index>{0, 0, 1, 2});

    const GPGraph g20 = GPGraph::build(20, 3);
    CHECK(edge_representation(g20, {g20.u(0)}, g20.outer(0)).distances == std::vector<Index>{0});
    CHECK(edge_representation(g20, {g20.u(0), g20.u(1)}, g20.outer(5)).distances == std::vector<Index>{4, 4});
}

TEST_CASE("verdicts") {
    const GPGraph g8 = GPGraph::build(8, 3);
    CHECK(is_edge_resolving(g8, {g8.u(0), g8.u(1), g8.u(2), g8.v(3)}).resolving());

    const GPGraph g11 = GPGraph::build(11, 3);
    CHECK(is_edge_resolving(g11, LandmarkList(g11.vertices())).resolving());

    const GPGraph g103 = GPGraph::build(103, 3);
    const Index h = 17;
    const LandmarkList uuv{g103.u(0), g103.u(1), g103.v(3 * h - 2)};
    const ResolveVerdict verdict = is_edge_resolving(g103, uuv);
    REQUIRE_FALSE(verdict.resolving());
    const DistanceTable table(g103);
    CHECK(same_representation(table, uuv, verdict.witness->first, verdict.witness->second));
    CHECK(same_representation(table, uuv, g103.outer(3 * h), g103.outer(3 * h + 1)));
    CHECK(edge_representation(table, uuv, g103.outer(3 * h)).distances == std::vector<Index>{h + 2, h + 2, 2});
    CHECK(verdict.witness->first < verdict.witness->second);
}

TEST_CASE("witness is the least confusable pair") {
    // Brute-force every pair and compare with the reported witness.
    std::mt19937_64 rng(7);
    for (Index n : {9, 12, 17, 25}) {
        const GPGraph g = GPGraph::build(n, 3);
        const DistanceTable table(g);
        const auto vs = g.vertices();
        const auto es = g.edges();
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Vertex> pick = vs;
            std::shuffle(pick.begin(), pick.end(), rng);
            pick.resize(1 + trial % 4);
            const LandmarkList landmarks(pick);
            std::optional<std::pair<Edge, Edge>> least;
            for (std::size_t a = 0; a < es.size() && !least; ++a) {
                for (std::size_t b = a + 1; b < es.size(); ++b) {
                    if (same_representation(table, landmarks, es[a], es[b])) {
                        least = std::pair{es[a], es[b]};
                        break;
                    }
                }
            }
            CHECK(is_edge_resolving(table, landmarks).witness == least);
        }
    }
}

TEST_CASE("verdict JSON") {
    const GPGraph g = GPGraph::build(20, 3);
    const ResolveVerdict confused = is_edge_resolving(g, {g.u(0)});
    const auto doc = to_json(confused);
    CHECK(doc["resolving"] == false);
    CHECK(doc["witness"]["e1"] == "u:0");
    CHECK(verdict_from_json(g, nlohmann::json::parse(doc.dump())).witness == confused.witness);

    const ResolveVerdict ok = is_edge_resolving(g, resolving_tetrad(20));
    CHECK(to_json(ok).dump() == "{\"resolving\":true}");
    CHECK(verdict_from_json(g, nlohmann::json::parse(to_json(ok).dump())).resolving());
    CHECK_THROWS_AS(verdict_from_json(g, nlohmann::json::parse("{\"resolving\":false}")), DomainError);
}

TEST_CASE("supersets of resolving sets resolve") {
    std::mt19937_64 rng(20240611);
    for (Index n = 11; n <= 40; ++n) {
        const GPGraph g = GPGraph::build(n, 3);
        const DistanceTable table(g);
        const LandmarkList base = resolving_tetrad(n);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Vertex> grown = base.vertices();
            std::vector<Vertex> rest;
            for (const Vertex& x : g.vertices()) {
                if (std::find(grown.begin(), grown.end(), x) == grown.end()) {
                    rest.push_back(x);
                }
            }
            std::shuffle(rest.begin(), rest.end(), rng);
            const auto extra = std::uniform_int_distribution<std::size_t>(1, rest.size())(rng);
            grown.insert(grown.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(extra));
            std::shuffle(grown.begin(), grown.end(), rng);
            REQUIRE(is_edge_resolving(table, LandmarkList(grown)).resolving());
        }
    }
}

TEST_CASE("the full vertex set resolves every P(n,k), n <= 40") {
    for (Index n = 3; n <= 40; ++n) {
        for (Index k = 1; 2 * k < n; ++k) {
            const GPGraph g = GPGraph::build(n, k);
            REQUIRE(is_edge_resolving(g, LandmarkList(g.vertices())).resolving());
        }
    }
}

TEST_CASE("closed equal-pair sets: examples") {
    const auto a100 = equal_pair_set_closed(ResidueContext::of(100), PairLayer::A, 0);
    for (Index i : {0, 5, 6, 50}) {
        CHECK(a100.contains(i));
    }
    for (Index i : {1, 4, 7}) {
        CHECK_FALSE(a100.contains(i));
    }
    const auto b100 = equal_pair_set_closed(ResidueContext::of(100), PairLayer::B, 0);
    for (Index i : {0, 2, 3}) {
        CHECK(b100.contains(i));
    }
    CHECK_FALSE(b100.contains(1));

    const auto c101 = ResidueContext::of(101);
    const auto shifted = equal_pair_set_closed(c101, PairLayer::A, 10);
    const auto base = equal_pair_set_closed(c101, PairLayer::A, 0);
    std::vector<Index> moved;
    for (Index i : base.indices) {
        moved.push_back(mod(i + 10, 101));
    }
    std::sort(moved.begin(), moved.end());
    CHECK(shifted.indices == moved);

    CHECK_THROWS_AS(equal_pair_set_closed(ResidueContext::of(99), PairLayer::A, 0), UnsupportedRange);
}

TEST_CASE("closed equal-pair sets equal the brute-force sets, 100 <= n <= 160") {
    for (Index n = 100; n <= 160; ++n) {
        const GPGraph g = GPGraph::build(n, 3);
        const DistanceTable table(g);
        const auto ctx = ResidueContext::of(n);
        for (Index t : {0, 1, 7}) {
            const auto a = equal_pair_set_brute(table, PairLayer::A, t);
            const auto b = equal_pair_set_brute(table, PairLayer::B, t);
            REQUIRE(a == equal_pair_set_closed(ctx, PairLayer::A, t));
            REQUIRE(b == equal_pair_set_closed(ctx, PairLayer::B, t));
            REQUIRE(std::includes(b.indices.begin(), b.indices.end(), a.indices.begin(), a.indices.end()));
        }
    }
}

TEST_CASE("A_t within B_t below n = 100 (exploratory)") {
    // Not claimed below 100; recorded, not asserted.
    std::vector<Index> violations;
    for (Index n = 13; n <= 300; ++n) {
        const DistanceTable table(GPGraph::build(n, 3));
        for (Index t : {Index{0}, (n + 2) / 4}) {
            const auto a = equal_pair_set_brute(table, PairLayer::A, t);
            const auto b = equal_pair_set_brute(table, PairLayer::B, t);
            if (!std::includes(b.indices.begin(), b.indices.end(), a.indices.begin(), a.indices.end())) {
                violations.push_back(n);
            }
        }
        if (n >= 100) {
            const auto a = equal_pair_set_brute(table, PairLayer::A, 0);
            const auto b = equal_pair_set_brute(table, PairLayer::B, 0);
            REQUIRE(std::includes(b.indices.begin(), b.indices.end(), a.indices.begin(), a.indices.end()));
        }
    }
    std::string listed;
    for (Index n : violations) {
        listed += " " + std::to_string(n);
    }
    MESSAGE("n in 13..300 where A_t is not inside B_t:" << (listed.empty() ? " none" : listed));
}

TEST_CASE("resolving tetrads") {
    const GPGraph g20 = GPGraph::build(20, 3);
    CHECK(resolving_tetrad(20) == LandmarkList{g20.u(0), g20.u(1), g20.u(7), g20.v(8)});
    const GPGraph g19 = GPGraph::build(19, 3);
    CHECK(resolving_tetrad(19) == LandmarkList{g19.u(0), g19.u(1), g19.v(2), g19.u(8)});

    // Least tetrads by an independent networkx enumeration.
    const GPGraph g11 = GPGraph::build(11, 3);
    CHECK(resolving_tetrad(11) == LandmarkList{g11.u(0), g11.u(1), g11.u(2), g11.v(3)});
    const GPGraph g17 = GPGraph::build(17, 3);
    CHECK(resolving_tetrad(17) == LandmarkList{g17.u(0), g17.u(1), g17.u(7), g17.u(8)});
    const GPGraph g18 = GPGraph::build(18, 3);
    CHECK(resolving_tetrad(18) == LandmarkList{g18.u(0), g18.u(1), g18.u(5), g18.v(17)});

    CHECK_THROWS_AS(resolving_tetrad(10), UnsupportedRange);
    for (Index n = 19; n <= 120; ++n) {
        REQUIRE(is_edge_resolving(GPGraph::build(n, 3), resolving_tetrad(n)).resolving());
    }
}

TEST_CASE("subset search budget") {
    const DistanceTable table(GPGraph::build(30, 3));
    CHECK_THROWS_AS(least_resolving_subset(table, 4, 1000), BudgetExceeded);
    CHECK_FALSE(least_resolving_subset(table, 1, 100).has_value());
}
