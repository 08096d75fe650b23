#include "gpedim/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "gpedim/bfs.hpp"
#include "gpedim/closed_form.hpp"
#include "gpedim/errors.hpp"
#include "gpedim/residue.hpp"

namespace gpedim {

nlohmann::ordered_json BenchReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["queries"] = queries;
    doc["mean_ns_formula"] = mean_ns_formula;
    doc["mean_ns_bfs"] = mean_ns_bfs;
    doc["speedup"] = speedup;
    return doc;
}

BenchReport BenchReport::from_json(const nlohmann::json& doc) {
    try {
        return {doc.at("n").get<Index>(), doc.at("queries").get<std::size_t>(), doc.at("mean_ns_formula").get<double>(),
                doc.at("mean_ns_bfs").get<double>(), doc.at("speedup").get<double>()};
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed bench report: ") + e.what());
    }
}

std::vector<std::pair<Vertex, Edge>> bench_queries(Index n, std::size_t queries, std::uint64_t seed) {
    const GPGraph g = GPGraph::build(n, 3);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> vertex(0, g.vertex_count() - 1);
    std::uniform_int_distribution<Index> edge(0, g.edge_count() - 1);
    std::vector<std::pair<Vertex, Edge>> out;
    out.reserve(queries);
    for (std::size_t q = 0; q < queries; ++q) {
        const Vertex x = g.vertex_at(vertex(rng));
        out.emplace_back(x, g.edge_at(edge(rng)));
    }
    return out;
}

BenchRun run_bench(Index n, std::size_t queries, std::uint64_t seed) {
    if (n < kClosedFormMinN) {
        throw UnsupportedRange("the formula branch needs n >= 13, got " + std::to_string(n));
    }
    if (queries == 0) {
        throw DomainError("bench needs at least one query");
    }
    using Clock = std::chrono::steady_clock;
    const GPGraph g = GPGraph::build(n, 3);
    const ResidueContext ctx = ResidueContext::of(n);
    BenchRun run;
    run.samples.reserve(queries);
    double total_formula = 0;
    double total_bfs = 0;
    for (const auto& [x, e] : bench_queries(n, queries, seed)) {
        const auto t0 = Clock::now();
        const Index formula = closed_ve(ctx, x, e);
        const auto t1 = Clock::now();
        const Index bfs = bfs_vertex_edge_distance(g, x, e);
        const auto t2 = Clock::now();

        if (formula != bfs) {
            run.disagreement = BenchDisagreement{x, e, formula, bfs};
            break;
        }
        BenchSample sample{x, e, formula, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count(),
                           std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count()};
        total_formula += static_cast<double>(sample.ns_formula);
        total_bfs += static_cast<double>(sample.ns_bfs);
        run.samples.push_back(sample);
    }
    const auto done = static_cast<double>(run.samples.size());
    run.report.n = n;
    run.report.queries = run.samples.size();
    if (done > 0) {
        run.report.mean_ns_formula = total_formula / done;
        run.report.mean_ns_bfs = total_bfs / done;
        // A zero-tick formula mean is clamped to one nanosecond.
        run.report.speedup = run.report.mean_ns_bfs / std::max(run.report.mean_ns_formula, 1.0);
    }
    return run;
}

} // namespace gpedim
