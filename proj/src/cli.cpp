#include "gpedim/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "gpedim/bench.hpp"
#include "gpedim/bfs.hpp"
#include "gpedim/claims.hpp"
#include "gpedim/closed_form.hpp"
#include "gpedim/engine.hpp"
#include "gpedim/errors.hpp"
#include "gpedim/graph_io.hpp"
#include "gpedim/parallel.hpp"

namespace gpedim {

namespace {

using Row = std::vector<std::string>;

struct Output {
    std::string human;
    nlohmann::ordered_json json;
    std::vector<Row> csv; // first row is the header
    int code = kExitOk;
};

struct Common {
    bool json = false;
    std::string csv_path;
};

void add_common(CLI::App* sub, Common& common) {
    sub->add_flag("--json", common.json, "Machine-readable JSON on stdout");
    sub->add_option("--csv", common.csv_path, "Also write the result rows as CSV to this path");
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        quoted += c;
        if (c == '"') {
            quoted += '"';
        }
    }
    return quoted + "\"";
}

void write_csv(const std::string& path, const std::vector<Row>& rows) {
    std::ofstream file(path);
    if (!file) {
        throw DomainError("cannot open CSV output '" + path + "'");
    }
    for (const Row& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            file << (i ? "," : "") << csv_field(row[i]);
        }
        file << '\n';
    }
}

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw DomainError("cannot read '" + path + "'");
    }
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

std::string join(const std::vector<Index>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + std::to_string(values[i]);
    }
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    for (std::string piece; std::getline(stream, piece, sep);) {
        out.push_back(piece);
    }
    return out;
}

std::vector<Index> parse_ints(const std::string& text, std::size_t expected = 0) {
    std::vector<Index> out;
    for (const std::string& piece : split(text, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(piece, &used));
            if (used != piece.size()) {
                throw std::invalid_argument(piece);
            }
        } catch (const std::logic_error&) {
            throw DomainError("expected an integer, got '" + piece + "'");
        }
    }
    if (out.empty() || (expected != 0 && out.size() != expected)) {
        throw DomainError("expected " + (expected ? std::to_string(expected) : std::string("some")) +
                          " comma-separated integers, got '" + text + "'");
    }
    return out;
}

GPGraph graph_p3(Index n) { return GPGraph::build(n, 3); }

// ---- dist ---------------------------------------------------------------------------------

struct DistArgs {
    Index n = 0;
    Index k = 3;
    std::string anchor;
    std::string edge;
    std::string vertex;
    std::string method = "auto";
};

Output do_dist(const DistArgs& a) {
    const GPGraph g = GPGraph::build(a.n, a.k);
    const Vertex x = parse_vertex(g, a.anchor);
    if (a.method == "formula" && !closed_form_applies(g)) {
        throw UnsupportedRange("the formula method needs k = 3 and n >= 13");
    }
    Index d = 0;
    std::string target;
    if (!a.edge.empty()) {
        const Edge e = parse_edge(g, a.edge);
        target = to_string(e);
        d = a.method == "bfs" ? bfs_vertex_edge_distance(g, x, e) : distance(g, x, e);
    } else {
        const Vertex y = parse_vertex(g, a.vertex);
        target = to_string(y);
        d = a.method == "bfs" ? bfs_vertex_distance(g, x, y) : vertex_distance(g, x, y);
    }
    Output out;
    out.json["distance"] = d;
    out.human = "d(" + to_string(x) + ", " + target + ") = " + std::to_string(d) + "\n";
    out.csv = {{"anchor", "target", "distance"}, {to_string(x), target, std::to_string(d)}};
    return out;
}

// ---- repr ---------------------------------------------------------------------------------

struct SetArgs {
    Index n = 0;
    Index k = 3;
    std::string set;
    std::string edges;
};

Output do_repr(const SetArgs& a) {
    const GPGraph g = GPGraph::build(a.n, a.k);
    const LandmarkList landmarks(parse_vertex_list(g, a.set));
    const DistanceTable table(g);
    std::vector<Edge> edges;
    if (a.edges.empty()) {
        edges = g.edges();
    } else {
        for (const std::string& piece : split(a.edges, ',')) {
            edges.push_back(parse_edge(g, piece));
        }
    }
    Output out;
    out.json["landmarks"] = landmarks.to_string();
    out.json["rows"] = nlohmann::ordered_json::array();
    Row header{"edge"};
    for (const Vertex& x : landmarks) {
        header.push_back("d(" + to_string(x) + ",.)");
    }
    out.csv.push_back(header);
    std::ostringstream human;
    for (const std::string& h : header) {
        human << std::left << std::setw(10) << h;
    }
    human << '\n';
    for (const Edge& e : edges) {
        const EdgeRepr r = edge_representation(table, landmarks, e);
        Row row{to_string(e)};
        human << std::left << std::setw(10) << to_string(e);
        for (Index d : r.distances) {
            row.push_back(std::to_string(d));
            human << std::left << std::setw(10) << d;
        }
        human << '\n';
        out.csv.push_back(row);
        nlohmann::ordered_json entry;
        entry["edge"] = to_string(e);
        entry["distances"] = r.distances;
        out.json["rows"].push_back(entry);
    }
    out.human = human.str();
    return out;
}

// ---- check --------------------------------------------------------------------------------

Output do_check(const SetArgs& a) {
    const GPGraph g = GPGraph::build(a.n, a.k);
    const LandmarkList landmarks(parse_vertex_list(g, a.set));
    const DistanceTable table(g);
    const ResolveVerdict verdict = is_edge_resolving(table, landmarks);
    Output out;
    out.json = to_json(verdict);
    if (verdict.resolving()) {
        out.human = "resolving\n";
        out.csv = {{"set", "resolving", "e1", "e2"}, {landmarks.to_string(), "true", "", ""}};
        return out;
    }
    const auto& [e1, e2] = *verdict.witness;
    out.human = "not resolving: " + to_string(e1) + " and " + to_string(e2) + " share (" +
                join(edge_representation(table, landmarks, e1).distances) + ")\n";
    out.csv = {{"set", "resolving", "e1", "e2"}, {landmarks.to_string(), "false", to_string(e1), to_string(e2)}};
    out.code = kExitClaimFails;
    return out;
}

// ---- dim ----------------------------------------------------------------------------------

struct DimArgs {
    Index n = 0;
    Index k = 3;
    bool exact = false;
    std::size_t max_k = 4;
    std::uint64_t budget = 5'000'000;
    bool sweep = false;
    bool allow_large = false;
    std::string certificate;
    std::string load;
};

Output do_dim(const DimArgs& a) {
    Output out;
    if (!a.load.empty()) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_file(a.load));
        } catch (const nlohmann::json::parse_error& e) {
            throw DomainError(std::string("certificate is not JSON: ") + e.what());
        }
        const Certificate cert = Certificate::from_json(doc);
        out.json["verified"] = true;
        out.json["certificate"] = cert.to_json();
        out.human = "certificate verified: P(" + std::to_string(cert.n) + ",3) has edge dimension " +
                    std::to_string(cert.dimension) + ", tetrad " + cert.tetrad.to_string() + "\n";
        out.csv = {{"n", "dimension", "tetrad", "verified"},
                   {std::to_string(cert.n), std::to_string(cert.dimension), cert.tetrad.to_string(), "true"}};
        return out;
    }
    if (a.exact) {
        const GPGraph g = GPGraph::build(a.n, a.k);
        const auto dim = edge_dimension_exact(g, a.max_k, a.budget);
        const std::string name = "P(" + std::to_string(a.n) + "," + std::to_string(a.k) + ")";
        if (dim) {
            out.json["edge_dimension"] = *dim;
            out.human = name + " has edge dimension " + std::to_string(*dim) + "\n";
        } else {
            out.json["edge_dimension"] = nullptr;
            out.json["exceeds_max_k"] = a.max_k;
            out.human = name + " has no edge resolving set of size <= " + std::to_string(a.max_k) + "\n";
            out.code = kExitClaimFails;
        }
        out.csv = {{"n", "k", "edge_dimension"},
                   {std::to_string(a.n), std::to_string(a.k), dim ? std::to_string(*dim) : std::string()}};
        return out;
    }
    if (a.k != 3) {
        throw DomainError("certified dimensions cover k = 3; pass --exact for other k");
    }
    SweepOptions options;
    options.allow_large = a.allow_large;
    const Certificate cert = edge_dimension_P3_certified(a.n, a.sweep, options);
    const auto doc = cert.to_json();
    if (!a.certificate.empty()) {
        std::ofstream file(a.certificate);
        if (!file) {
            throw DomainError("cannot write certificate to '" + a.certificate + "'");
        }
        file << doc.dump(2) << '\n';
    }
    out.json["edge_dimension"] = cert.dimension;
    out.json["certificate"] = doc;
    out.human = "P(" + std::to_string(a.n) + ",3) has edge dimension 4\n  tetrad " + cert.tetrad.to_string() +
                " (verified)\n  triad sweep " +
                (cert.triad_sweep ? "done, " + std::to_string(cert.triad_sweep->checked) + " triads, sha256 " +
                                        cert.triad_sweep->transcript_sha256
                                  : std::string("skipped")) +
                "\n";
    out.csv = {{"n", "dimension", "tetrad", "sweep_checked", "transcript_sha256"},
               {std::to_string(a.n), "4", cert.tetrad.to_string(),
                cert.triad_sweep ? std::to_string(cert.triad_sweep->checked) : "",
                cert.triad_sweep ? cert.triad_sweep->transcript_sha256 : ""}};
    return out;
}

// ---- verify -------------------------------------------------------------------------------

struct VerifyArgs {
    std::string claim;
    Index from = 0;
    Index to = 0;
    bool allow_large = false;
};

Output do_verify(const VerifyArgs& a) {
    const Claim claim = parse_claim(a.claim);
    if (a.to < a.from) {
        throw DomainError("empty range " + std::to_string(a.from) + ".." + std::to_string(a.to));
    }
    const ClaimRange range = claim_range(claim, a.allow_large);
    if (a.from < range.min_n) {
        throw UnsupportedRange(a.claim + " is stated for n >= " + std::to_string(range.min_n));
    }
    if (a.to > range.max_n) {
        throw BudgetExceeded(a.claim + " is capped at n <= " + std::to_string(range.max_n));
    }
    const auto count = static_cast<std::size_t>(a.to - a.from + 1);
    const unsigned workers = claim == Claim::NoTriad ? 1U : 0U;
    const auto results = parallel_map(
        count, [&](std::size_t i) { return check_claim(claim, a.from + static_cast<Index>(i), a.allow_large); },
        workers);

    Output out;
    bool all = true;
    std::ostringstream human;
    out.json["claim"] = a.claim;
    out.json["results"] = nlohmann::ordered_json::array();
    out.csv.push_back({"n", "pass", "detail"});
    for (const ClaimResult& r : results) {
        all = all && r.pass;
        human << "n=" << r.n << (r.pass ? " pass " : " FAIL ") << r.detail << '\n';
        nlohmann::ordered_json entry;
        entry["n"] = r.n;
        entry["pass"] = r.pass;
        entry["detail"] = r.detail;
        out.json["results"].push_back(entry);
        out.csv.push_back({std::to_string(r.n), r.pass ? "true" : "false", r.detail});
    }
    out.json["pass"] = all;
    human << a.claim << ": " << (all ? "all pass" : "FAILED") << '\n';
    out.human = human.str();
    out.code = all ? kExitOk : kExitClaimFails;
    return out;
}

// ---- witness ------------------------------------------------------------------------------

struct WitnessArgs {
    Index n = 0;
    std::string pair;
    std::string triple;
    std::string shape;
};

Output do_witness(const WitnessArgs& a) {
    if (a.n < kSporadicMinN) {
        throw UnsupportedRange("witnesses are tabulated for n >= 100");
    }
    CanonicalPair p;
    if (!a.triple.empty()) {
        const auto t = parse_ints(a.triple, 3);
        p = canonicalize_triple(a.n, t[0], t[1], t[2]);
    } else {
        const auto v = parse_ints(a.pair, 2);
        p = {v[0], v[1]};
    }
    if (!in_S(a.n, p)) {
        throw DomainError("(" + std::to_string(p.a) + "," + std::to_string(p.b) + ") is not in S_n");
    }
    std::vector<TriadShape> shapes;
    if (a.shape.empty()) {
        shapes.assign(TriadShape::all().begin(), TriadShape::all().end());
    } else {
        shapes.push_back(TriadShape::parse(a.shape));
    }
    const GPGraph g = graph_p3(a.n);
    const DistanceTable table(g);
    const CommonWitnessFinder finder(table);
    const bool sporadic = W_set(a.n).contains(p);
    std::optional<Index> common;
    if (!sporadic) {
        common = common_A_witness(table, finder, p);
    }

    Output out;
    out.json["n"] = a.n;
    out.json["a"] = p.a;
    out.json["b"] = p.b;
    out.json["sporadic"] = sporadic;
    out.json["common_index"] = common ? nlohmann::ordered_json(*common) : nlohmann::ordered_json(nullptr);
    out.json["pairs"] = nlohmann::ordered_json::array();
    out.csv.push_back({"a", "b", "shape", "e1", "e2", "representation"});
    std::ostringstream human;
    human << "(a,b) = (" << p.a << "," << p.b << ")";
    if (sporadic) {
        human << " lies in W_" << a.n << '\n';
    } else {
        human << ", common index " << *common << " in A_0, A_a and A_b\n";
    }
    for (const TriadShape& shape : shapes) {
        std::pair<Edge, Edge> confused;
        if (!sporadic) {
            const Index i = common.value_or(0);
            confused = {g.outer(i - 1), g.outer(i)};
        } else {
            confused = confusable_witness(table, p, shape);
        }
        const auto [e1, e2] = confused;
        const LandmarkList landmarks = shape.landmarks(g, p.a, p.b);
        if (!same_representation(table, landmarks, e1, e2)) {
            throw ConsistencyError("pair " + to_string(e1) + ", " + to_string(e2) + " is resolved by " +
                                   landmarks.to_string());
        }
        const std::string repr = join(edge_representation(table, landmarks, e1).distances);
        human << "  " << shape.to_string() << "  {" << landmarks.to_string() << "}  " << to_string(e1) << " "
              << to_string(e2) << "  (" << repr << ")\n";
        nlohmann::ordered_json entry;
        entry["shape"] = shape.to_string();
        entry["e1"] = to_string(e1);
        entry["e2"] = to_string(e2);
        entry["representation"] = edge_representation(table, landmarks, e1).distances;
        out.json["pairs"].push_back(entry);
        out.csv.push_back({std::to_string(p.a), std::to_string(p.b), shape.to_string(), to_string(e1),
                           to_string(e2), repr});
    }
    out.human = human.str();
    return out;
}

// ---- export -------------------------------------------------------------------------------

struct ExportArgs {
    Index n = 0;
    Index k = 3;
    std::string format = "dot";
    std::string out_path;
};

Output do_export(const ExportArgs& a, bool json_flag) {
    const GPGraph g = GPGraph::build(a.n, a.k);
    const ExportFormat format = (json_flag || a.format == "json") ? ExportFormat::Json : ExportFormat::Dot;
    const std::string text = export_graph(g, format);
    Output out;
    if (!a.out_path.empty()) {
        std::ofstream file(a.out_path);
        if (!file) {
            throw DomainError("cannot write '" + a.out_path + "'");
        }
        file << text;
        out.human = "wrote " + a.out_path + "\n";
    } else {
        out.human = text;
    }
    if (format == ExportFormat::Json) {
        out.json = nlohmann::ordered_json::parse(text);
    }
    out.csv.push_back({"kind", "index", "from", "to"});
    for (const Edge& e : g.edges()) {
        const auto [x, y] = g.incident_vertices(e);
        out.csv.push_back({to_string(e.kind), std::to_string(e.index), to_string(x), to_string(y)});
    }
    return out;
}

// ---- bench --------------------------------------------------------------------------------

struct BenchArgs {
    std::string ns = "1000,100000";
    std::size_t queries = 10000;
    std::uint64_t seed = 42;
};

Output do_bench(const BenchArgs& a) {
    const auto ns = parse_ints(a.ns);
    for (Index n : ns) {
        if (n < kClosedFormMinN) {
            throw UnsupportedRange("bench needs n >= 13 for the formula branch, got " + std::to_string(n));
        }
    }
    Output out;
    out.json["seed"] = a.seed;
    out.json["reports"] = nlohmann::ordered_json::array();
    out.csv.push_back({"n", "query", "anchor", "edge", "distance", "ns_formula", "ns_bfs"});
    std::ostringstream human;
    human << std::left << std::setw(10) << "n" << std::setw(10) << "queries" << std::setw(16) << "formula ns"
          << std::setw(16) << "bfs ns" << "speedup\n";
    for (Index n : ns) {
        const BenchRun run = run_bench(n, a.queries, a.seed);
        if (run.disagreement) {
            const auto& d = *run.disagreement;
            out.json["disagreement"] = {{"n", n},
                                        {"anchor", to_string(d.anchor)},
                                        {"edge", to_string(d.edge)},
                                        {"formula", d.formula},
                                        {"bfs", d.bfs}};
            human << "DISAGREEMENT at n=" << n << ": d(" << to_string(d.anchor) << ", " << to_string(d.edge)
                  << ") formula " << d.formula << ", bfs " << d.bfs << '\n';
            out.code = kExitClaimFails;
            break;
        }
        out.json["reports"].push_back(run.report.to_json());
        human << std::left << std::setw(10) << n << std::setw(10) << run.report.queries << std::setw(16)
              << std::fixed << std::setprecision(1) << run.report.mean_ns_formula << std::setw(16)
              << run.report.mean_ns_bfs << std::setprecision(1) << run.report.speedup << "x\n";
        for (std::size_t q = 0; q < run.samples.size(); ++q) {
            const BenchSample& s = run.samples[q];
            out.csv.push_back({std::to_string(n), std::to_string(q), to_string(s.anchor), to_string(s.edge),
                               std::to_string(s.distance), std::to_string(s.ns_formula), std::to_string(s.ns_bfs)});
        }
    }
    out.human = human.str();
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distances, edge resolving sets and edge-dimension checks for generalized Petersen graphs."};
    app.name("gpedim");
    app.require_subcommand(1);
    Common common;

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "Distance from a vertex to an edge or vertex");
    dist_cmd->add_option("--n", dist.n, "Cycle length")->required();
    dist_cmd->add_option("--k", dist.k, "Inner step")->capture_default_str();
    dist_cmd->add_option("--anchor", dist.anchor, "Source vertex, e.g. u0")->required();
    auto* edge_opt = dist_cmd->add_option("--edge", dist.edge, "Target edge, e.g. u:5, s:0, v:-3");
    auto* vertex_opt = dist_cmd->add_option("--vertex", dist.vertex, "Target vertex");
    edge_opt->excludes(vertex_opt);
    dist_cmd->add_option("--method", dist.method, "auto, formula or bfs")
        ->check(CLI::IsMember({"auto", "formula", "bfs"}))
        ->capture_default_str();
    add_common(dist_cmd, common);

    SetArgs repr;
    auto* repr_cmd = app.add_subcommand("repr", "Edge metric representations for a landmark list");
    repr_cmd->add_option("--n", repr.n)->required();
    repr_cmd->add_option("--k", repr.k)->capture_default_str();
    repr_cmd->add_option("--set", repr.set, "Landmarks, e.g. u0,u1,v3")->required();
    repr_cmd->add_option("--edges", repr.edges, "Edges to list (default: all)");
    add_common(repr_cmd, common);

    SetArgs check;
    auto* check_cmd = app.add_subcommand("check", "Is a vertex set edge resolving?");
    check_cmd->add_option("--n", check.n)->required();
    check_cmd->add_option("--k", check.k)->capture_default_str();
    check_cmd->add_option("--set", check.set)->required();
    add_common(check_cmd, common);

    DimArgs dim;
    auto* dim_cmd = app.add_subcommand("dim", "Edge dimension: exact search or certificate for P(n,3)");
    dim_cmd->add_option("--n", dim.n);
    dim_cmd->add_option("--k", dim.k)->capture_default_str();
    dim_cmd->add_flag("--exact", dim.exact, "Exhaustive subset search");
    dim_cmd->add_option("--max-k", dim.max_k, "Largest size searched with --exact")->capture_default_str();
    dim_cmd->add_option("--budget", dim.budget, "Subsets allowed per size with --exact")->capture_default_str();
    dim_cmd->add_flag("--sweep", dim.sweep, "Run the triad sweep into the certificate");
    dim_cmd->add_flag("--allow-large", dim.allow_large, "Permit sweeps above n = 400");
    dim_cmd->add_option("--certificate", dim.certificate, "Write the certificate JSON here");
    auto* load_opt = dim_cmd->add_option("--load", dim.load, "Re-verify a stored certificate");
    add_common(dim_cmd, common);

    VerifyArgs verify;
    Index verify_n = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Check a claim for every n in a range");
    verify_cmd->add_option("--claim", verify.claim, "no-triad, tetrad, lemma-ab, prop-sw, lemma-w, undeviating")
        ->required();
    auto* from_opt = verify_cmd->add_option("--from", verify.from);
    auto* to_opt = verify_cmd->add_option("--to", verify.to);
    auto* n_opt = verify_cmd->add_option("--n", verify_n, "Single n");
    from_opt->needs(to_opt);
    to_opt->needs(from_opt);
    n_opt->excludes(from_opt);
    verify_cmd->add_flag("--allow-large", verify.allow_large, "Lift the no-triad cap");
    add_common(verify_cmd, common);

    WitnessArgs witness;
    auto* witness_cmd = app.add_subcommand("witness", "Confusable edge pairs for the triads {a0, b_a, c_b}");
    witness_cmd->add_option("--n", witness.n)->required();
    auto* pair_opt = witness_cmd->add_option("--pair", witness.pair, "a,b in S_n");
    auto* triple_opt = witness_cmd->add_option("--triple", witness.triple, "x,y,z, canonicalized first");
    pair_opt->excludes(triple_opt);
    witness_cmd->add_option("--shape", witness.shape, "One of uuu..vvv (default: all)");
    add_common(witness_cmd, common);

    ExportArgs exp;
    auto* export_cmd = app.add_subcommand("export", "Write the graph as DOT or JSON");
    export_cmd->add_option("--n", exp.n)->required();
    export_cmd->add_option("--k", exp.k)->capture_default_str();
    export_cmd->add_option("--format", exp.format)->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
    export_cmd->add_option("--out", exp.out_path, "Output file (default: stdout)");
    add_common(export_cmd, common);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Closed form versus BFS timing on random queries");
    bench_cmd->add_option("--n", bench.ns, "Comma-separated n values")->capture_default_str();
    bench_cmd->add_option("--queries", bench.queries)->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
    add_common(bench_cmd, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Output result;
        if (dist_cmd->parsed()) {
            if (dist.edge.empty() && dist.vertex.empty()) {
                throw DomainError("dist needs --edge or --vertex");
            }
            result = do_dist(dist);
        } else if (repr_cmd->parsed()) {
            result = do_repr(repr);
        } else if (check_cmd->parsed()) {
            result = do_check(check);
        } else if (dim_cmd->parsed()) {
            if (load_opt->count() == 0 && dim.n == 0) {
                throw DomainError("dim needs --n (or --load)");
            }
            result = do_dim(dim);
        } else if (verify_cmd->parsed()) {
            if (n_opt->count() > 0) {
                verify.from = verify.to = verify_n;
            } else if (from_opt->count() == 0) {
                throw DomainError("verify needs --n or --from/--to");
            }
            result = do_verify(verify);
        } else if (witness_cmd->parsed()) {
            if (witness.pair.empty() && witness.triple.empty()) {
                throw DomainError("witness needs --pair or --triple");
            }
            result = do_witness(witness);
        } else if (export_cmd->parsed()) {
            result = do_export(exp, common.json);
        } else {
            result = do_bench(bench);
        }
        if (!common.csv_path.empty()) {
            write_csv(common.csv_path, result.csv);
        }
        if (common.json) {
            out << result.json.dump() << '\n';
        } else {
            out << result.human;
        }
        return result.code;
    } catch (const ConsistencyError& e) {
        err << "error: " << e.what() << '\n';
        return kExitClaimFails;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedRange& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace gpedim
