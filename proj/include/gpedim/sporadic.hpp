#ifndef GPEDIM_SPORADIC_HPP
#define GPEDIM_SPORADIC_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpedim/canonical.hpp"
#include "gpedim/distance.hpp"
#include "gpedim/resolving.hpp"

namespace gpedim {

/// Layer choices (alpha, beta, gamma) for the triad {alpha_0, beta_a, gamma_b}.
struct TriadShape {
    std::array<Layer, 3> layers{Layer::Outer, Layer::Outer, Layer::Outer};

    /// The eight shapes in the order uuu, uuv, uvu, uvv, vuu, vuv, vvu, vvv.
    static const std::array<TriadShape, 8>& all();
    static TriadShape parse(std::string_view text);

    std::string to_string() const;
    LandmarkList landmarks(const GPGraph& g, Index a, Index b) const;

    friend auto operator<=>(const TriadShape&, const TriadShape&) = default;
};

struct SporadicSet {
    std::vector<CanonicalPair> pairs;
    /// Set when n < 100: the pairs are the n >= 100 description evaluated outside its regime.
    bool regime_caveat = false;

    bool contains(const CanonicalPair& p) const;
};

inline constexpr Index kSporadicMinN = 100;

/// The 0/3/0/2/8/9 sporadic pairs keyed on n mod 6. Throws UnsupportedRange for n < 19.
SporadicSet W_set(Index n);

/// Equal-pair set A_0 of P(n,3) as a membership table; A_t is A_0 shifted by t.
class CommonWitnessFinder {
public:
    explicit CommonWitnessFinder(const DistanceTable& table);

    Index n() const { return n_; }
    bool in_A(Index t, Index i) const { return in_a0_[static_cast<std::size_t>(mod(i - t, n_))]; }
    bool in_B(Index t, Index i) const { return in_b0_[static_cast<std::size_t>(mod(i - t, n_))]; }

    /// Least element of A_0 ∩ A_a ∩ A_b, if any.
    std::optional<Index> least_common(Index a, Index b) const;
    /// Least element of A_0 ∩ A_t, if any.
    std::optional<Index> least_common(Index t) const;

private:
    Index n_;
    std::vector<bool> in_a0_;
    std::vector<bool> in_b0_;
};

/// Element of A_0 ∩ A_a ∩ A_b read from the explicit residue tables (n mod 6 in {1, 3, 4}),
/// reduced mod n. nullopt for other residues and for pairs in W_n. Not verified.
std::optional<Index> table_common_witness(Index n, const CanonicalPair& p);

/// Index in A_0 ∩ A_a ∩ A_b for p in S_n (n >= 100). The table entry is preferred when it
/// exists and checks out; otherwise the least element of the brute-force intersection.
/// nullopt exactly when the intersection is empty, in which case p is checked to lie in W_n
/// (ConsistencyError otherwise). Throws DomainError if p is not in S_n.
std::optional<Index> common_A_witness(Index n, const CanonicalPair& p);
std::optional<Index> common_A_witness(const DistanceTable& table, const CommonWitnessFinder& finder,
                                      const CanonicalPair& p);

/// Candidate for A_0 ∩ A_t, 1 <= t <= n-1, read from the r_t residue table (n >= 100).
/// Unverified: for n mod 3 in {0, 1} some entries near and beyond n/2 miss the intersection.
Index table_distinct_subscript_witness(Index n, Index t);

/// Verified element of A_0 ∩ A_t: the table candidate when it lies in the intersection,
/// otherwise the least element. ConsistencyError if the intersection is empty.
Index distinct_subscript_witness(const CommonWitnessFinder& finder, Index t);

/// Edge pair with equal representations relative to shape.landmarks(a, b), for p in W_n
/// (n >= 100). Shapes missing from the explicit tables are derived from a listed shape by
/// turning outer landmarks inner, which preserves equality for consecutive outer arcs.
/// The pair is re-verified; ConsistencyError if verification fails.
std::pair<Edge, Edge> confusable_witness(Index n, const CanonicalPair& p, const TriadShape& shape);
std::pair<Edge, Edge> confusable_witness(const DistanceTable& table, const CanonicalPair& p, const TriadShape& shape);

} // namespace gpedim

#endif
