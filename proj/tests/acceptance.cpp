// Acceptance run: one PASS/FAIL (or WARN) line per criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>

#include "gpedim/bench.hpp"
#include "gpedim/bfs.hpp"
#include "gpedim/closed_form.hpp"
#include "gpedim/engine.hpp"
#include "gpedim/parallel.hpp"

using namespace gpedim;

namespace {

enum class Outcome { Pass, Fail, Warn };

struct Verdict {
    Outcome outcome = Outcome::Pass;
    std::string detail;
};

Verdict pass(std::string detail) { return {Outcome::Pass, std::move(detail)}; }
Verdict fail(std::string detail) { return {Outcome::Fail, std::move(detail)}; }

// First failure message across n in [lo, hi], evaluated in parallel; empty if none.
std::string first_failure(Index lo, Index hi, const std::function<std::string(Index)>& check) {
    const auto messages =
        parallel_map(static_cast<std::size_t>(hi - lo + 1), [&](std::size_t i) { return check(lo + static_cast<Index>(i)); });
    for (const std::string& m : messages) {
        if (!m.empty()) {
            return m;
        }
    }
    return {};
}

Verdict criterion1() {
    std::size_t compared = 0;
    std::mutex m;
    const std::string failure = first_failure(13, 300, [&](Index n) -> std::string {
        const GPGraph g = GPGraph::build(n, 3);
        const ResidueContext ctx = ResidueContext::of(n);
        std::mt19937_64 rng(static_cast<std::uint64_t>(n));
        std::uniform_int_distribution<Index> pick(0, g.vertex_count() - 1);
        std::vector<Vertex> anchors{g.u(0), g.v(0)};
        for (int r = 0; r < 5; ++r) {
            anchors.push_back(g.vertex_at(pick(rng)));
        }
        std::size_t local = 0;
        for (const Vertex& x : anchors) {
            const auto truth = bfs_edge_distances(g, x);
            for (const Edge& e : g.edges()) {
                ++local;
                if (closed_ve(ctx, x, e) != truth[static_cast<std::size_t>(g.id(e))]) {
                    return "n=" + std::to_string(n) + " d(" + to_string(x) + ", " + to_string(e) + ")";
                }
            }
        }
        const std::lock_guard lock(m);
        compared += local;
        return {};
    });
    return failure.empty() ? pass(std::to_string(compared) + " vertex-edge distances, 13 <= n <= 300")
                           : fail("mismatch at " + failure);
}

Verdict criterion2() {
    const std::string failure = first_failure(13, 300, [](Index n) -> std::string {
        const GPGraph g = GPGraph::build(n, 3);
        const ResidueContext ctx = ResidueContext::of(n);
        for (Anchor a : {Anchor::U0, Anchor::V0}) {
            const Vertex source = a == Anchor::U0 ? g.u(0) : g.v(0);
            const auto truth = bfs_distances(g, source);
            for (const Vertex& y : g.vertices()) {
                if (closed_vv(ctx, a, y) != truth[static_cast<std::size_t>(g.id(y))]) {
                    return "n=" + std::to_string(n) + " d(" + to_string(source) + ", " + to_string(y) + ")";
                }
            }
        }
        return {};
    });
    return failure.empty() ? pass("d(u0,.) and d(v0,.) on every vertex, 13 <= n <= 300")
                           : fail("mismatch at " + failure);
}

Verdict criterion3() {
    const std::vector<std::pair<Index, std::size_t>> expected{{8, 4}, {9, 3}, {10, 3}};
    std::ostringstream got;
    bool ok = true;
    for (const auto& [n, dim] : expected) {
        const auto found = edge_dimension_exact(GPGraph::build(n, 3), 4);
        got << "P(" << n << ",3)=" << (found ? std::to_string(*found) : std::string(">4")) << " ";
        ok = ok && found == dim;
    }
    return ok ? pass(got.str()) : fail(got.str() + "(expected 4, 3, 3)");
}

Verdict criterion4() {
    std::size_t checked = 0;
    for (Index n = 11; n <= 40; ++n) {
        const SweepResult sweep = verify_no_resolving_triad(n);
        if (!sweep.none_resolves()) {
            return fail("n=" + std::to_string(n) + " resolving triad " + sweep.resolving->to_string());
        }
        checked += sweep.checked;
    }
    return pass(std::to_string(checked) + " triads, none resolving, 11 <= n <= 40");
}

Verdict criterion5() {
    const std::string failure = first_failure(11, 300, [](Index n) -> std::string {
        const LandmarkList set = resolving_tetrad(n);
        const ResolveVerdict v = is_edge_resolving(GPGraph::build(n, 3), set);
        return v.resolving() ? std::string()
                             : "n=" + std::to_string(n) + " " + set.to_string() + " confuses " +
                                   to_string(v.witness->first) + ", " + to_string(v.witness->second);
    });
    return failure.empty() ? pass("every tetrad resolves, 11 <= n <= 300") : fail(failure);
}

Verdict criterion6() {
    const std::string failure = first_failure(100, 160, [](Index n) -> std::string {
        const GPGraph g = GPGraph::build(n, 3);
        const ResidueContext ctx = ResidueContext::of(n);
        const auto a = equal_pair_set_brute(g, PairLayer::A, 0);
        const auto b = equal_pair_set_brute(g, PairLayer::B, 0);
        if (a != equal_pair_set_closed(ctx, PairLayer::A, 0)) return "n=" + std::to_string(n) + " A_0";
        if (b != equal_pair_set_closed(ctx, PairLayer::B, 0)) return "n=" + std::to_string(n) + " B_0";
        for (Index i : a.indices) {
            if (!b.contains(i)) return "n=" + std::to_string(n) + " A_0 not inside B_0 at " + std::to_string(i);
        }
        return {};
    });
    return failure.empty() ? pass("closed A_0, B_0 equal brute force and A_0 within B_0, 100 <= n <= 160")
                           : fail(failure);
}

// Edge representation straight from BFS rows, independent of DistanceTable.
std::vector<Index> bfs_repr(const GPGraph& g, const std::vector<std::vector<Index>>& rows,
                            const LandmarkList& landmarks, const Edge& e) {
    std::vector<Index> out;
    for (const Vertex& x : landmarks) {
        out.push_back(rows[static_cast<std::size_t>(g.id(x))][static_cast<std::size_t>(g.id(e))]);
    }
    return out;
}

Verdict criterion7() {
    std::size_t witnessed = 0;
    std::size_t confused = 0;
    for (Index n = 100; n <= 105; ++n) {
        const GPGraph g = GPGraph::build(n, 3);
        const DistanceTable table(g);
        const CommonWitnessFinder finder(table);
        std::vector<std::vector<Index>> rows;
        for (const Vertex& x : g.vertices()) {
            rows.push_back(bfs_edge_distances(g, x));
        }
        auto equal_outer = [&](const Vertex& x, Index i) {
            const auto& row = rows[static_cast<std::size_t>(g.id(x))];
            return row[static_cast<std::size_t>(g.id(g.outer(i - 1)))] == row[static_cast<std::size_t>(g.id(g.outer(i)))];
        };
        const SporadicSet w = W_set(n);
        for (const CanonicalPair& p : enumerate_S(n)) {
            if (w.contains(p)) {
                continue;
            }
            const auto i = common_A_witness(table, finder, p);
            if (!i || !equal_outer(g.u(0), *i) || !equal_outer(g.u(p.a), *i) || !equal_outer(g.u(p.b), *i)) {
                return fail("n=" + std::to_string(n) + " (" + std::to_string(p.a) + "," + std::to_string(p.b) +
                            ") has no verified common A witness");
            }
            ++witnessed;
        }
        for (const CanonicalPair& p : w.pairs) {
            for (const TriadShape& shape : TriadShape::all()) {
                const auto [e1, e2] = confusable_witness(table, p, shape);
                const LandmarkList landmarks = shape.landmarks(g, p.a, p.b);
                if (e1 == e2 || bfs_repr(g, rows, landmarks, e1) != bfs_repr(g, rows, landmarks, e2)) {
                    return fail("n=" + std::to_string(n) + " shape " + shape.to_string() + " pair (" +
                                std::to_string(p.a) + "," + std::to_string(p.b) + ")");
                }
                ++confused;
            }
        }
    }
    return pass(std::to_string(witnessed) + " common A witnesses, " + std::to_string(confused) +
                " sporadic triads confused, 100 <= n <= 105");
}

Verdict criterion8() {
    const std::string failure = first_failure(13, 60, [](Index n) -> std::string {
        const GPGraph g = GPGraph::build(n, 3);
        for (const Vertex& x : g.vertices()) {
            const auto truth = bfs_distances(g, x);
            const auto cw = directional_distances(g, x, Orientation::Clockwise);
            const auto ccw = directional_distances(g, x, Orientation::Counterclockwise);
            const auto cw2 = directional_distances(g, x, Orientation::Clockwise, 2);
            const auto ccw2 = directional_distances(g, x, Orientation::Counterclockwise, 2);
            for (std::size_t id = 0; id < truth.size(); ++id) {
                const bool reach = cw[id] != kUnreachable && ccw[id] != kUnreachable && cw2[id] != kUnreachable &&
                                   ccw2[id] != kUnreachable;
                if (!reach || std::min(cw[id], ccw[id]) != truth[id] || std::min(cw2[id], ccw2[id]) != truth[id]) {
                    return "n=" + std::to_string(n) + " " + to_string(x) + " -> " +
                           to_string(g.vertex_at(static_cast<Index>(id)));
                }
            }
        }
        return {};
    });
    return failure.empty() ? pass("all ordered vertex pairs, 13 <= n <= 60") : fail(failure);
}

Verdict criterion9() {
    const BenchRun run = run_bench(100000, 10000, 42);
    if (run.disagreement) {
        const auto& d = *run.disagreement;
        return fail("formula " + std::to_string(d.formula) + " vs BFS " + std::to_string(d.bfs) + " at d(" +
                    to_string(d.anchor) + ", " + to_string(d.edge) + ")");
    }
    std::ostringstream detail;
    detail.precision(1);
    detail << std::fixed << "n=100000, 10000 identical answers, formula " << run.report.mean_ns_formula
           << " ns, BFS " << run.report.mean_ns_bfs << " ns, speedup " << run.report.speedup << "x";
    if (run.report.speedup < 10) {
        return {Outcome::Warn, detail.str() + " (below 10x)"};
    }
    return pass(detail.str());
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"vertex-edge closed form equals BFS", criterion1},
        {"vertex-vertex closed form equals BFS", criterion2},
        {"exact dimensions of P(8,3), P(9,3), P(10,3)", criterion3},
        {"no resolving triad", criterion4},
        {"tabulated tetrads resolve", criterion5},
        {"equal-pair sets A_0, B_0", criterion6},
        {"common witnesses and sporadic confusable pairs", criterion7},
        {"undeviating shortest paths", criterion8},
        {"closed form speedup over BFS", criterion9},
    };
    bool ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const char* label = v.outcome == Outcome::Pass ? "PASS" : v.outcome == Outcome::Warn ? "WARN" : "FAIL";
        ok = ok && v.outcome != Outcome::Fail;
        std::cout << label << " criterion " << i + 1 << " (" << criteria[i].first << "): " << v.detail << " ["
                  << std::fixed << std::setprecision(1) << seconds << " s]" << std::endl;
    }
    return ok ? 0 : 1;
}
