#ifndef GPEDIM_BENCH_HPP
#define GPEDIM_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpedim/graph.hpp"

namespace gpedim {

struct BenchSample {
    Vertex anchor;
    Edge edge;
    Index distance = 0;
    std::int64_t ns_formula = 0;
    std::int64_t ns_bfs = 0;
};

struct BenchReport {
    Index n = 0;
    std::size_t queries = 0;
    double mean_ns_formula = 0;
    double mean_ns_bfs = 0;
    double speedup = 0; // mean_ns_bfs / mean_ns_formula

    nlohmann::ordered_json to_json() const;
    static BenchReport from_json(const nlohmann::json& doc);

    friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

struct BenchDisagreement {
    Vertex anchor;
    Edge edge;
    Index formula = 0;
    Index bfs = 0;
};

struct BenchRun {
    BenchReport report;
    std::vector<BenchSample> samples;
    std::optional<BenchDisagreement> disagreement; // set means the run stopped early
};

// The (anchor, edge) stream for P(n,3) drawn from mt19937_64(seed); identical seeds give
// identical streams.
std::vector<std::pair<Vertex, Edge>> bench_queries(Index n, std::size_t queries, std::uint64_t seed);

// Times the closed form and BFS per query on the same stream. Requires n >= 13.
BenchRun run_bench(Index n, std::size_t queries, std::uint64_t seed);

} // namespace gpedim

#endif
