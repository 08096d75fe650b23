#ifndef GPEDIM_CANONICAL_HPP
#define GPEDIM_CANONICAL_HPP

#include <compare>
#include <vector>

#include "gpedim/graph.hpp"

namespace gpedim {

/// Representative (0, a, b) of a class of subscript triples under x -> x + c and x -> c - x.
struct CanonicalPair {
    Index a = 0;
    Index b = 0;

    friend auto operator<=>(const CanonicalPair&, const CanonicalPair&) = default;
};

/// 1 <= a <= floor(n/3) and 2a <= b <= floor((n + a)/2).
bool in_S(Index n, const CanonicalPair& p);

/// Every pair of S_n in ascending lexicographic order. Requires n >= 3.
std::vector<CanonicalPair> enumerate_S(Index n);

/// The lexicographically least (a, b) in S_n such that {x, y, z} maps onto {0, a, b} under a
/// translation or reflection of Z_n. Throws DomainError unless x, y, z are distinct mod n.
CanonicalPair canonicalize_triple(Index n, Index x, Index y, Index z);

} // namespace gpedim

#endif
