#include "gpedim/canonical.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "gpedim/errors.hpp"

namespace gpedim {

bool in_S(Index n, const CanonicalPair& p) {
    return p.a >= 1 && 3 * p.a <= n && p.b >= 2 * p.a && 2 * p.b <= n + p.a;
}

std::vector<CanonicalPair> enumerate_S(Index n) {
    if (n < 3) {
        throw DomainError("S_n needs n >= 3");
    }
    std::vector<CanonicalPair> out;
    for (Index a = 1; a <= n / 3; ++a) {
        for (Index b = 2 * a; b <= (n + a) / 2; ++b) {
            out.push_back({a, b});
        }
    }
    return out;
}

CanonicalPair canonicalize_triple(Index n, Index x, Index y, Index z) {
    if (n < 3) {
        throw DomainError("canonicalize_triple needs n >= 3");
    }
    const std::array<Index, 3> t{mod(x, n), mod(y, n), mod(z, n)};
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
        throw DomainError("canonicalize_triple needs three distinct residues");
    }
    // Any of the three elements can be sent to 0, with either orientation; those six images
    // cover every representative of the form {0, a, b}.
    std::optional<CanonicalPair> best;
    for (Index anchor : t) {
        for (Index sign : {1, -1}) {
            std::array<Index, 2> rest{};
            std::size_t j = 0;
            for (Index w : t) {
                if (w != anchor) {
                    rest[j++] = mod(sign * (w - anchor), n);
                }
            }
            std::sort(rest.begin(), rest.end());
            const CanonicalPair candidate{rest[0], rest[1]};
            if (in_S(n, candidate) && (!best || candidate < *best)) {
                best = candidate;
            }
        }
    }
    if (!best) {
        throw ConsistencyError("no S_n representative found for a distinct triple");
    }
    return *best;
}

} // namespace gpedim
