#include "gpedim/residue.hpp"

#include "gpedim/errors.hpp"

namespace gpedim {

ResidueDecomp decomp3(Index m) {
    if (m < 0) {
        throw DomainError("decomp3 expects m >= 0, got " + std::to_string(m));
    }
    return {m / 3, m % 3};
}

ResidueContext ResidueContext::of(Index n) {
    if (n < 3) {
        throw DomainError("residue context needs n >= 3, got " + std::to_string(n));
    }
    ResidueContext ctx;
    ctx.n = n;
    ctx.qn = n / 3;
    ctx.rn = n % 3;
    ctx.rn6 = n % 6;
    ctx.h = n / 6;
    // floor(n/2) - 1 - j must be a multiple of 3 with j = rn (mod 3).
    const Index top = n / 2 - 1;
    ctx.Mn = top - mod(top - ctx.rn, 3);
    return ctx;
}

} // namespace gpedim
