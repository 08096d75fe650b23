#include "gpedim/engine.hpp"

#include <algorithm>

#include "gpedim/errors.hpp"
#include "gpedim/parallel.hpp"

namespace gpedim {

namespace {

std::pair<Edge, Edge> ordered(std::pair<Edge, Edge> p) {
    if (p.second < p.first) {
        std::swap(p.first, p.second);
    }
    return p;
}

std::pair<Edge, Edge> consecutive_outer_pair(const GPGraph& g, Index i) { return {g.outer(i - 1), g.outer(i)}; }

SweepRow check_triad(const DistanceTable& table, Index a, Index b, const TriadShape& shape,
                     const std::optional<std::pair<Edge, Edge>>& candidate) {
    const LandmarkList landmarks = shape.landmarks(table.graph(), a, b);
    SweepRow row{a, b, shape, std::nullopt};
    if (candidate && same_representation(table, landmarks, candidate->first, candidate->second)) {
        row.witness = ordered(*candidate);
    } else {
        row.witness = is_edge_resolving(table, landmarks).witness;
    }
    return row;
}

std::string witness_text(const SweepRow& row) {
    if (!row.witness) {
        return "";
    }
    return to_string(row.witness->first) + "|" + to_string(row.witness->second);
}

} // namespace

std::string SweepResult::transcript_csv() const {
    std::string out = "a,b,shape,verdict,witness\n";
    for (const SweepRow& row : rows) {
        out += std::to_string(row.a) + "," + std::to_string(row.b) + "," + row.shape.to_string() + "," +
               (row.witness ? "confused" : "resolves") + "," + witness_text(row) + "\n";
    }
    return out;
}

SweepResult verify_no_resolving_triad(Index n, const SweepOptions& options) {
    if (n < kSweepMinN) {
        throw UnsupportedRange("the triad sweep needs n >= 7, got " + std::to_string(n));
    }
    if (n > kSweepDefaultMaxN && !options.allow_large) {
        throw BudgetExceeded("the triad sweep is O(n^4); n = " + std::to_string(n) + " exceeds " +
                             std::to_string(kSweepDefaultMaxN) + " without the override");
    }
    const GPGraph g = GPGraph::build(n, 3);
    const DistanceTable table(g);
    const bool fast = options.fast_paths && n >= kSporadicMinN;
    const std::optional<CommonWitnessFinder> finder =
        fast ? std::optional<CommonWitnessFinder>(std::in_place, table) : std::nullopt;
    const std::optional<SporadicSet> sporadic = fast ? std::optional<SporadicSet>(W_set(n)) : std::nullopt;

    const Index repeated = n / 2;
    const std::vector<CanonicalPair> pairs = enumerate_S(n);
    const std::size_t items = static_cast<std::size_t>(repeated) + pairs.size();

    const auto per_item = parallel_map(
        items,
        [&](std::size_t item) {
            std::vector<SweepRow> rows;
            if (item < static_cast<std::size_t>(repeated)) {
                const Index t = static_cast<Index>(item) + 1;
                std::optional<std::pair<Edge, Edge>> candidate;
                if (fast) {
                    candidate = consecutive_outer_pair(g, distinct_subscript_witness(*finder, t));
                }
                for (const char* shape : {"uvu", "uvv"}) {
                    rows.push_back(check_triad(table, 0, t, TriadShape::parse(shape), candidate));
                }
                return rows;
            }
            const CanonicalPair& p = pairs[item - static_cast<std::size_t>(repeated)];
            std::optional<Index> common;
            if (fast) {
                common = common_A_witness(table, *finder, p);
            }
            for (const TriadShape& shape : TriadShape::all()) {
                std::optional<std::pair<Edge, Edge>> candidate;
                if (common) {
                    candidate = consecutive_outer_pair(g, *common);
                } else if (fast && sporadic->contains(p)) {
                    candidate = confusable_witness(table, p, shape);
                }
                rows.push_back(check_triad(table, p.a, p.b, shape, candidate));
            }
            return rows;
        },
        options.workers);

    SweepResult result;
    result.n = n;
    for (const auto& rows : per_item) {
        for (const SweepRow& row : rows) {
            if (!row.witness && !result.resolving) {
                result.resolving = row.shape.landmarks(g, row.a, row.b);
            }
            result.rows.push_back(row);
        }
    }
    result.checked = result.rows.size();
    result.transcript_sha256 = sha256_hex(result.transcript_csv());
    return result;
}

std::optional<std::size_t> edge_dimension_exact(const GPGraph& g, std::size_t max_k, std::uint64_t budget) {
    const DistanceTable table(g);
    for (std::size_t size = 1; size <= max_k; ++size) {
        if (least_resolving_subset(table, size, budget)) {
            return size;
        }
    }
    return std::nullopt;
}

nlohmann::ordered_json Certificate::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["dimension"] = dimension;
    doc["tetrad"] = tetrad.to_string();
    nlohmann::ordered_json sweep;
    if (triad_sweep) {
        sweep["status"] = "done";
        sweep["checked"] = triad_sweep->checked;
        sweep["transcript_sha256"] = triad_sweep->transcript_sha256;
    } else {
        sweep["status"] = "skipped";
    }
    doc["triad_sweep"] = sweep;
    doc["content_hash"] = sha256_hex(doc.dump());
    return doc;
}

Certificate Certificate::from_json(const nlohmann::json& doc) {
    Index n = 0;
    std::size_t dimension = 0;
    std::string tetrad_text;
    std::string status;
    std::string hash;
    std::optional<TriadSweepRecord> sweep;
    try {
        n = doc.at("n").get<Index>();
        dimension = doc.at("dimension").get<std::size_t>();
        tetrad_text = doc.at("tetrad").get<std::string>();
        const auto& s = doc.at("triad_sweep");
        status = s.at("status").get<std::string>();
        if (status == "done") {
            sweep = TriadSweepRecord{s.at("checked").get<std::size_t>(), s.at("transcript_sha256").get<std::string>()};
        } else if (status != "skipped") {
            throw DomainError("triad_sweep.status must be 'done' or 'skipped'");
        }
        hash = doc.at("content_hash").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed certificate: ") + e.what());
    }
    if (n < kDimensionFourMinN) {
        throw DomainError("certificates cover P(n,3) with n >= 11");
    }
    const GPGraph g = GPGraph::build(n, 3);
    Certificate cert{n, dimension, LandmarkList(parse_vertex_list(g, tetrad_text)), sweep};
    if (cert.to_json().at("content_hash") != hash) {
        throw ConsistencyError("certificate content hash does not match its fields");
    }
    if (cert.dimension != 4 || cert.tetrad.size() != 4) {
        throw ConsistencyError("certificate must claim dimension 4 with a four-vertex set");
    }
    if (!is_edge_resolving(g, cert.tetrad).resolving()) {
        throw ConsistencyError("certificate tetrad " + tetrad_text + " does not resolve P(" + std::to_string(n) + ",3)");
    }
    return cert;
}

Certificate edge_dimension_P3_certified(Index n, bool sweep, const SweepOptions& options) {
    if (n < kDimensionFourMinN) {
        throw UnsupportedRange("P(" + std::to_string(n) +
                               ",3) lies below the dimension-4 regime; use edge_dimension_exact instead");
    }
    const LandmarkList tetrad = resolving_tetrad(n);
    std::optional<TriadSweepRecord> record;
    if (sweep) {
        const SweepResult result = verify_no_resolving_triad(n, options);
        if (!result.none_resolves()) {
            throw ConsistencyError("triad " + result.resolving->to_string() + " resolves P(" + std::to_string(n) + ",3)");
        }
        record = TriadSweepRecord{result.checked, result.transcript_sha256};
    }
    return Certificate{n, 4, tetrad, record};
}

} // namespace gpedim
