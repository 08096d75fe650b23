#ifndef GPEDIM_ENGINE_HPP
#define GPEDIM_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpedim/hash.hpp"
#include "gpedim/resolving.hpp"
#include "gpedim/sporadic.hpp"

namespace gpedim {

inline constexpr Index kSweepMinN = 7;
inline constexpr Index kDimensionFourMinN = 11;
inline constexpr Index kSweepDefaultMaxN = 400;

struct SweepOptions {
    bool allow_large = false;   // lift the n <= 400 guard
    bool fast_paths = true;     // use tabulated witnesses when n >= 100
    unsigned workers = 0;       // 0: worker_count()
};

// One transcript line. Repeated-subscript triads {u0, v0, gamma_t} appear with a = 0, b = t
// and shape "uv" + gamma, so shape.landmarks(a, b) always reproduces the triad.
struct SweepRow {
    Index a = 0;
    Index b = 0;
    TriadShape shape;
    std::optional<std::pair<Edge, Edge>> witness; // nullopt: the triad resolves
};

struct SweepResult {
    Index n = 0;
    std::size_t checked = 0;
    std::optional<LandmarkList> resolving; // first resolving triad in transcript order
    std::vector<SweepRow> rows;

    bool none_resolves() const { return !resolving; }
    // "a,b,shape,verdict,witness" header plus one line per row.
    std::string transcript_csv() const;
    std::string transcript_sha256;
};

// Every vertex triad of P(n,3), n >= 7, up to rotation and reflection: {u0, v0, gamma_t} for
// 1 <= t <= floor(n/2), then S_n x 8 shapes.
SweepResult verify_no_resolving_triad(Index n, const SweepOptions& options = {});

// Smallest edge resolving set size up to max_k, nullopt if larger. Each size searched costs
// at most `budget` subsets (BudgetExceeded otherwise).
std::optional<std::size_t> edge_dimension_exact(const GPGraph& g, std::size_t max_k,
                                                std::uint64_t budget = 5'000'000);

struct TriadSweepRecord {
    std::size_t checked = 0;
    std::string transcript_sha256;

    friend bool operator==(const TriadSweepRecord&, const TriadSweepRecord&) = default;
};

struct Certificate {
    Index n = 0;
    std::size_t dimension = 0;
    LandmarkList tetrad;
    std::optional<TriadSweepRecord> triad_sweep; // nullopt: skipped

    nlohmann::ordered_json to_json() const;
    // Checks the content hash, then re-verifies that the tetrad resolves P(n,3).
    static Certificate from_json(const nlohmann::json& doc);

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Dimension-4 certificate for P(n,3), n >= 11. n < 11 throws UnsupportedRange (use
// edge_dimension_exact). With sweep = true, a failing sweep raises ConsistencyError.
Certificate edge_dimension_P3_certified(Index n, bool sweep, const SweepOptions& options = {});

} // namespace gpedim

#endif
