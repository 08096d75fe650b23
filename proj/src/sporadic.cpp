#include "gpedim/sporadic.hpp"

#include <algorithm>

#include "gpedim/errors.hpp"

namespace gpedim {

const std::array<TriadShape, 8>& TriadShape::all() {
    static const std::array<TriadShape, 8> shapes = [] {
        std::array<TriadShape, 8> out{};
        for (std::size_t code = 0; code < 8; ++code) {
            for (std::size_t j = 0; j < 3; ++j) {
                out[code].layers[j] = (code >> (2 - j)) & 1U ? Layer::Inner : Layer::Outer;
            }
        }
        return out;
    }();
    return shapes;
}

TriadShape TriadShape::parse(std::string_view text) {
    if (text.size() != 3) {
        throw DomainError("triad shape must be three letters from {u, v}, got '" + std::string(text) + "'");
    }
    TriadShape shape;
    for (std::size_t j = 0; j < 3; ++j) {
        if (text[j] != 'u' && text[j] != 'v') {
            throw DomainError("triad shape must be three letters from {u, v}, got '" + std::string(text) + "'");
        }
        shape.layers[j] = text[j] == 'u' ? Layer::Outer : Layer::Inner;
    }
    return shape;
}

std::string TriadShape::to_string() const {
    std::string out;
    for (Layer layer : layers) {
        out += layer == Layer::Outer ? 'u' : 'v';
    }
    return out;
}

LandmarkList TriadShape::landmarks(const GPGraph& g, Index a, Index b) const {
    return {g.vertex(layers[0], 0), g.vertex(layers[1], a), g.vertex(layers[2], b)};
}

bool SporadicSet::contains(const CanonicalPair& p) const {
    return std::find(pairs.begin(), pairs.end(), p) != pairs.end();
}

namespace {

// An index of the form coef * h + offset, n = 6h + r.
struct HTerm {
    Index coef;
    Index offset;

    Index at(Index h) const { return coef * h + offset; }
};

struct EdgeTerm {
    EdgeKind kind;
    HTerm index;
};

constexpr EdgeTerm U(Index coef, Index offset) { return {EdgeKind::OuterArc, {coef, offset}}; }
constexpr EdgeTerm S(Index coef, Index offset) { return {EdgeKind::Spoke, {coef, offset}}; }
constexpr EdgeTerm V(Index coef, Index offset) { return {EdgeKind::InnerArc, {coef, offset}}; }

struct PairEntry {
    std::string_view shape; // "*" matches every shape
    EdgeTerm first;
    EdgeTerm second;
};

struct SporadicRow {
    Index residue; // n mod 6
    HTerm a;
    HTerm b;
    std::vector<PairEntry> entries;
};

// Confusable pairs for every sporadic (a, b), keyed on n mod 6. Listing order per residue is
// the order of W_n.
const std::vector<SporadicRow>& sporadic_rows() {
    static const std::vector<SporadicRow> rows = {
        // n = 6h + 1
        {1, {0, 1}, {3, -2}, {
            {"uuu", U(3, 3), S(3, 3)},
            {"uuv", U(3, 0), U(3, 1)},
            {"uvu", U(3, -1), S(3, -1)},
            {"vuu", U(3, 2), S(3, 3)},
            {"vvu", U(0, -3), U(0, -2)},
        }},
        {1, {0, 2}, {3, 0}, {
            {"uuu", U(0, 2), S(0, 2)},
            {"uuv", U(3, 1), U(3, 2)},
            {"uvu", U(3, 4), S(3, 5)},
            {"vuu", U(0, 4), S(0, 4)},
            {"vvu", U(0, -1), U(0, 0)},
        }},
        {1, {0, 5}, {3, 3}, {
            {"uuu", U(0, 5), S(0, 5)},
            {"uuv", U(3, 4), U(3, 5)},
            {"uvu", U(3, 7), S(3, 8)},
            {"vuu", U(0, 7), S(0, 7)},
            {"vvu", U(0, 2), U(0, 3)},
        }},
        // n = 6h + 3
        {3, {0, 1}, {0, 2}, {{"*", U(0, -5), U(0, 6)}}},
        {3, {0, 2}, {0, 4}, {{"*", U(3, 2), U(3, 4)}}},
        // n = 6h + 4
        {4, {0, 1}, {0, 2}, {{"*", U(0, -5), U(0, 6)}}},
        {4, {0, 1}, {3, -2}, {
            {"uuu", U(3, 3), S(3, 3)},
            {"uuv", U(3, -1), U(3, 0)},
            {"uvu", U(3, -1), S(3, -1)},
            {"vuu", U(3, 3), S(3, 3)},
            {"vvu", U(0, -3), U(0, -2)},
        }},
        {4, {0, 1}, {3, 1}, {{"*", U(0, -6), U(0, 5)}}},
        {4, {0, 2}, {3, 0}, {
            {"uuu", U(3, 5), S(3, 5)},
            {"uuv", U(3, 1), U(3, 2)},
            {"uvu", U(3, 5), S(3, 5)},
            {"vuu", U(0, 4), S(0, 4)},
            {"vvu", U(0, -1), U(0, 0)},
        }},
        {4, {0, 2}, {3, 3}, {{"*", U(0, -5), U(0, 6)}}},
        {4, {0, 4}, {3, 1}, {
            {"uuu", U(0, 5), S(0, 5)},
            {"uuv", U(3, 3), U(3, 4)},
            {"uvu", U(0, 5), S(0, 5)},
            {"vuu", U(3, 3), S(3, 3)},
            {"vvu", U(0, 1), U(0, 2)},
        }},
        {4, {0, 5}, {3, 3}, {
            {"uuu", U(3, 8), S(3, 8)},
            {"uuv", U(3, 4), U(3, 5)},
            {"uvu", U(3, 8), S(3, 8)},
            {"vuu", U(0, 7), S(0, 7)},
            {"vvu", U(0, 2), U(0, 3)},
        }},
        {4, {0, 8}, {3, 6}, {
            {"uuu", U(3, 11), S(3, 11)},
            {"uuv", U(3, 7), U(3, 8)},
            {"uvu", U(3, 11), S(3, 11)},
            {"vuu", U(0, 10), S(0, 10)},
            {"vvu", U(0, 5), U(0, 6)},
        }},
        // n = 6h + 5
        {5, {0, 1}, {0, 2}, {{"*", U(0, -5), U(0, 6)}}},
        {5, {0, 1}, {0, 5}, {
            {"uuu", U(0, 1), S(0, 1)},
            {"uuv", U(3, 5), S(3, 3)},
            {"uvu", U(0, 2), S(0, 2)},
            {"uvv", U(3, 5), S(3, 3)},
            {"vuu", U(0, 1), S(0, 1)},
            {"vuv", U(3, 5), S(3, 3)},
            {"vvu", U(3, 4), S(3, 7)},
            {"vvv", U(3, 5), S(3, 3)},
        }},
        {5, {0, 1}, {0, 8}, {
            {"uuu", U(0, 1), S(0, 1)},
            {"uuv", U(3, 5), S(3, 3)},
            {"uvu", U(0, 5), S(0, 5)},
            {"uvv", U(3, 5), S(3, 3)},
            {"vuu", U(0, 1), S(0, 1)},
            {"vuv", U(3, 5), S(3, 3)},
            {"vvu", U(3, 7), S(3, 10)},
            {"vvv", U(3, 5), S(3, 3)},
        }},
        {5, {0, 2}, {0, 4}, {
            {"uuu", V(3, 2), V(3, 4)},
            {"uuv", U(3, 7), S(3, 5)},
            {"uvu", V(3, 2), V(3, 4)},
            {"uvv", U(3, 7), S(3, 5)},
            {"vuu", U(0, 4), S(0, 4)},
            {"vuv", U(3, 7), S(3, 5)},
            {"vvu", U(3, 4), S(3, 3)},
            {"vvv", U(3, 7), S(3, 5)},
        }},
        {5, {0, 2}, {0, 7}, {
            {"uuu", V(3, 2), V(3, 4)},
            {"uuv", U(3, 7), S(3, 5)},
            {"uvu", V(3, 2), V(3, 4)},
            {"uvv", U(3, 7), S(3, 5)},
            {"vuu", U(0, 1), U(0, 2)},
        }},
        {5, {0, 2}, {0, 10}, {
            {"uuu", V(3, 2), V(3, 4)},
            {"uuv", U(3, 7), S(3, 5)},
            {"uvu", V(3, 2), V(3, 4)},
            {"uvv", U(3, 7), S(3, 5)},
            {"vuu", U(0, 1), U(0, 2)},
        }},
        {5, {0, 4}, {0, 8}, {{"*", V(3, 4), V(3, 6)}}},
        {5, {0, 4}, {0, 11}, {{"*", V(3, 4), V(3, 6)}}},
        {5, {0, 7}, {0, 14}, {{"*", V(3, 7), V(3, 9)}}},
    };
    return rows;
}

const SporadicRow* find_row(Index n, const CanonicalPair& p) {
    const Index h = n / 6;
    for (const SporadicRow& row : sporadic_rows()) {
        if (row.residue == n % 6 && row.a.at(h) == p.a && row.b.at(h) == p.b) {
            return &row;
        }
    }
    return nullptr;
}

Edge realize(const GPGraph& g, const EdgeTerm& term) { return g.edge(term.kind, term.index.at(g.n() / 6)); }

bool consecutive_outer(const GPGraph& g, const Edge& a, const Edge& b) {
    return a.kind == EdgeKind::OuterArc && b.kind == EdgeKind::OuterArc &&
           (mod(b.index - a.index, g.n()) == 1 || mod(a.index - b.index, g.n()) == 1);
}

// `from` reaches `to` by turning some outer landmarks into inner ones.
bool refines(const TriadShape& from, const TriadShape& to) {
    for (std::size_t j = 0; j < 3; ++j) {
        if (from.layers[j] != to.layers[j] && from.layers[j] != Layer::Outer) {
            return false;
        }
    }
    return true;
}

std::string pair_name(const CanonicalPair& p) {
    return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

} // namespace

SporadicSet W_set(Index n) {
    if (n < 19) {
        throw UnsupportedRange("the sporadic set is described for n >= 19, got n = " + std::to_string(n));
    }
    SporadicSet out;
    out.regime_caveat = n < kSporadicMinN;
    const Index h = n / 6;
    for (const SporadicRow& row : sporadic_rows()) {
        if (row.residue == n % 6) {
            out.pairs.push_back({row.a.at(h), row.b.at(h)});
        }
    }
    return out;
}

CommonWitnessFinder::CommonWitnessFinder(const DistanceTable& table) : n_(table.graph().n()) {
    in_a0_.assign(static_cast<std::size_t>(n_), false);
    in_b0_.assign(static_cast<std::size_t>(n_), false);
    for (Index i : equal_pair_set_brute(table, PairLayer::A, 0).indices) {
        in_a0_[static_cast<std::size_t>(i)] = true;
    }
    for (Index i : equal_pair_set_brute(table, PairLayer::B, 0).indices) {
        in_b0_[static_cast<std::size_t>(i)] = true;
    }
}

std::optional<Index> CommonWitnessFinder::least_common(Index a, Index b) const {
    for (Index i = 0; i < n_; ++i) {
        if (in_A(0, i) && in_A(a, i) && in_A(b, i)) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<Index> table_common_witness(Index n, const CanonicalPair& p) {
    const Index rn6 = n % 6;
    if (rn6 != 1 && rn6 != 3 && rn6 != 4) {
        return std::nullopt;
    }
    if (n >= 19 && W_set(n).contains(p)) {
        return std::nullopt;
    }
    const Index h = n / 6;
    const Index a = p.a;
    const Index b = p.b;
    const Index ra = a % 3;
    const Index rb = b % 3;
    Index value = 0;
    if (rn6 == 3) {
        if (ra == 0) {
            value = rb == 0 ? -6 : rb == 1 ? b + 5 : (b == 3 * h - 4 || b == 3 * h + 2) ? 3 * h - 4 : 3 * h - 1;
        } else if (ra == 1) {
            if (rb == 0) {
                value = (a == 1 && b == 3) ? -5 : b;
            } else if (rb == 1) {
                value = -5;
            } else {
                value = b - a > 7 ? a + 5 : 3 * h + b - a;
            }
        } else {
            if (rb == 0) {
                value = -6;
            } else if (rb == 1) {
                value = a > 2 ? a : 3 * h + 6;
            } else {
                value = a > 2 ? a : (b == 5 || b == 11) ? 11 : 8;
            }
        }
    } else if (rn6 == 1) {
        if (ra == 0) {
            value = rb == 0 ? -5 : rb == 1 ? (b <= 3 * h - 5 ? -5 : 3 * h - 7) : b;
        } else if (ra == 1) {
            if (rb == 0) {
                value = -5;
            } else if (rb == 1) {
                value = b <= 3 * h - 5 ? -5 : b == 3 * h - 2 ? 3 * h + 4 : b;
            } else {
                value = b <= 3 * h - 4 ? 3 * h + 1 : -5;
            }
        } else {
            value = rb == 0 ? b + 5 : rb == 1 ? (b <= 3 * h - 2 ? 3 * h + 4 : b) : -6;
        }
    } else {
        if (ra == 0) {
            value = rb == 0 ? -5 : rb == 1 ? (b <= 3 * h - 5 ? -5 : 3 * h - 7) : -6;
        } else if (ra == 1) {
            if (rb == 0) {
                value = -5;
            } else if (rb == 1) {
                value = b <= 3 * h - 5 ? -5 : b >= 3 * h + 4 ? b : b + 6;
            } else {
                value = b <= 3 * h - 4 ? b + 3 * h : -5;
            }
        } else {
            value = rb == 0 ? b + 5 : rb == 1 ? (b <= 3 * h - 2 ? 3 * h + 4 : 3 * h - 4) : -6;
        }
    }
    return mod(value, n);
}

std::optional<Index> common_A_witness(Index n, const CanonicalPair& p) {
    const DistanceTable table(GPGraph::build(n, 3));
    return common_A_witness(table, CommonWitnessFinder(table), p);
}

std::optional<Index> common_A_witness(const DistanceTable& table, const CommonWitnessFinder& finder,
                                      const CanonicalPair& p) {
    const GPGraph& g = table.graph();
    const Index n = g.n();
    if (g.k() != 3 || n < kSporadicMinN) {
        throw UnsupportedRange("common A witnesses are defined for P(n,3), n >= 100");
    }
    if (!in_S(n, p)) {
        throw DomainError("pair " + pair_name(p) + " is not in S_" + std::to_string(n));
    }
    if (const auto proposed = table_common_witness(n, p)) {
        if (finder.in_A(0, *proposed) && finder.in_A(p.a, *proposed) && finder.in_A(p.b, *proposed)) {
            return proposed;
        }
    }
    const auto least = finder.least_common(p.a, p.b);
    if (!least && !W_set(n).contains(p)) {
        throw ConsistencyError("A_0 ∩ A_a ∩ A_b is empty for " + pair_name(p) + " outside W_" + std::to_string(n));
    }
    return least;
}

std::optional<Index> CommonWitnessFinder::least_common(Index t) const {
    for (Index i = 0; i < n_; ++i) {
        if (in_A(0, i) && in_A(t, i)) {
            return i;
        }
    }
    return std::nullopt;
}

Index table_distinct_subscript_witness(Index n, Index t) {
    if (n < kSporadicMinN) {
        throw UnsupportedRange("the repeated-subscript witness table needs n >= 100");
    }
    t = mod(t, n);
    if (t == 0) {
        throw DomainError("distinct_subscript_witness needs t != 0 mod n");
    }
    const Index rt = t % 3;
    if (t <= n / 2) {
        return mod(rt == 1 ? t + 5 : t + 6, n);
    }
    return mod(rt == 0 ? t - 6 : t - 5, n);
}

Index distinct_subscript_witness(const CommonWitnessFinder& finder, Index t) {
    const Index n = finder.n();
    const Index proposed = table_distinct_subscript_witness(n, t);
    if (finder.in_A(0, proposed) && finder.in_A(t, proposed)) {
        return proposed;
    }
    const auto least = finder.least_common(t);
    if (!least) {
        throw ConsistencyError("A_0 ∩ A_t is empty for t = " + std::to_string(t) + ", n = " + std::to_string(n));
    }
    return *least;
}

std::pair<Edge, Edge> confusable_witness(Index n, const CanonicalPair& p, const TriadShape& shape) {
    return confusable_witness(DistanceTable(GPGraph::build(n, 3)), p, shape);
}

std::pair<Edge, Edge> confusable_witness(const DistanceTable& table, const CanonicalPair& p, const TriadShape& shape) {
    const GPGraph& g = table.graph();
    const Index n = g.n();
    if (g.k() != 3 || n < kSporadicMinN) {
        throw UnsupportedRange("confusable witnesses are tabulated for P(n,3), n >= 100");
    }
    const SporadicRow* row = find_row(n, p);
    if (row == nullptr) {
        throw DomainError("pair " + pair_name(p) + " is not in W_" + std::to_string(n));
    }
    std::optional<std::pair<Edge, Edge>> chosen;
    for (const PairEntry& entry : row->entries) {
        if (entry.shape == "*" || TriadShape::parse(entry.shape) == shape) {
            chosen = std::pair{realize(g, entry.first), realize(g, entry.second)};
            break;
        }
    }
    if (!chosen) {
        for (const PairEntry& entry : row->entries) {
            const Edge first = realize(g, entry.first);
            const Edge second = realize(g, entry.second);
            if (consecutive_outer(g, first, second) && refines(TriadShape::parse(entry.shape), shape)) {
                chosen = std::pair{first, second};
                break;
            }
        }
    }
    if (!chosen) {
        throw ConsistencyError("no tabulated confusable pair for " + pair_name(p) + " shape " + shape.to_string());
    }
    if (!same_representation(table, shape.landmarks(g, p.a, p.b), chosen->first, chosen->second)) {
        throw ConsistencyError("tabulated pair " + to_string(chosen->first) + ", " + to_string(chosen->second) +
                               " is resolved by shape " + shape.to_string() + " at " + pair_name(p) +
                               ", n = " + std::to_string(n));
    }
    return *chosen;
}

} // namespace gpedim
