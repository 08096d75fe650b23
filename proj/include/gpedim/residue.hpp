#ifndef GPEDIM_RESIDUE_HPP
#define GPEDIM_RESIDUE_HPP

#include "gpedim/graph.hpp"

namespace gpedim {

/// m = 3q + r with r in {0, 1, 2}.
struct ResidueDecomp {
    Index q = 0;
    Index r = 0;

    friend bool operator==(const ResidueDecomp&, const ResidueDecomp&) = default;
};

/// Throws DomainError for negative m; callers reduce modulo n first.
ResidueDecomp decomp3(Index m);

/// Modular bookkeeping for P(n,3) that every closed form depends on.
struct ResidueContext {
    Index n = 0;
    Index qn = 0;
    Index rn = 0;
    Index rn6 = 0; ///< n mod 6
    Index h = 0;   ///< n = 6h + rn6
    Index Mn = 0;  ///< largest j < floor(n/2) with j = n (mod 3)

    static ResidueContext of(Index n);

    Index half() const { return n / 2; }
};

} // namespace gpedim

#endif
