#include "gpedim/closed_form.hpp"

#include <algorithm>

#include "gpedim/errors.hpp"

namespace gpedim {

namespace {

void require_range(const ResidueContext& ctx) {
    if (ctx.n < kClosedFormMinN) {
        throw UnsupportedRange("closed-form distances need n >= 13, got n = " + std::to_string(ctx.n));
    }
}

Index ceil_div3(Index m) { return (m + 2) / 3; }

// |r_n - r_i|, except that (r_n, r_i) = (0, 2) gives 0. This makes q_n - q_i + r equal to
// q_{n-i} + r_{n-i} - 1 whenever r_n < r_i, and q_{n-i} + r_{n-i} otherwise.
Index gap_residue(Index rn, Index ri) {
    if (rn == 0 && ri == 2) {
        return 0;
    }
    return rn > ri ? rn - ri : ri - rn;
}

// d(u_0, u_i) for 0 <= i <= floor(n/2).
Index uu(const ResidueContext& c, Index i) {
    const auto [qi, ri] = decomp3(i);
    if (i <= 2) {
        return qi + ri;
    }
    if (c.rn6 == 5 && i == c.half()) {
        return qi + ri + 1;
    }
    return qi + ri + 2;
}

// d(u_0, v_i) for 0 <= i <= floor(n/2).
Index uv(const ResidueContext& c, Index i) {
    const auto [qi, ri] = decomp3(i);
    if (c.rn6 == 5 && i == c.half()) {
        return qi + ri;
    }
    return qi + ri + 1;
}

// d(v_0, v_i) for 0 <= i <= floor(n/2).
Index vv(const ResidueContext& c, Index i) {
    const auto [qi, ri] = decomp3(i);
    if (c.rn6 == 5 && i == c.half()) {
        return qi + ri - 1;
    }
    if (((c.rn6 == 2 || c.rn6 == 4) && i == c.Mn) || ri == 0) {
        return qi + ri;
    }
    if ((c.rn6 == 1 || c.rn6 == 5) && i == c.Mn) {
        return qi + ri + 1;
    }
    return qi + ri + 2;
}

Index u0_outer(const ResidueContext& c, Index i) {
    const Index n = c.n;
    if (i <= 2 || i >= n - 3) {
        return std::min(i, n - 1 - i);
    }
    return std::min(ceil_div3(i) + 2, ceil_div3(n - i - 1) + 2);
}

Index u0_spoke(const ResidueContext& c, Index i) {
    const Index n = c.n;
    if (i <= 2 || i >= n - 2) {
        return std::min(i, n - i);
    }
    const auto [qi, ri] = decomp3(i);
    return std::min(qi + ri + 1, c.qn - qi + gap_residue(c.rn, ri) + 1);
}

Index u0_inner(const ResidueContext& c, Index i) {
    const Index n = c.n;
    if (i <= 1 || i == n - 1) {
        return std::min(i + 1, n - i + 1);
    }
    const auto [qi, ri] = decomp3(i);
    return std::min(qi + ri + 1, c.qn - qi + gap_residue(c.rn, ri));
}

Index v0_outer(const ResidueContext& c, Index i) {
    const auto [qi, ri] = decomp3(i);
    const Index qn = c.qn;
    const Index rn = c.rn;
    if (ri == 0 || (rn == 0 && ri == 2)) {
        return std::min(qi + ri / 2 + 1, qn - qi + rn / 2 - ri / 2 + 1);
    }
    return std::min(qi + 2, qn - qi + 1);
}

Index v0_spoke(const ResidueContext& c, Index i) {
    const auto [qi, ri] = decomp3(i);
    const Index qn = c.qn;
    const Index rn = c.rn;
    if (ri == rn) {
        return rn == 0 ? std::min(qi, qn - qi) : std::min(qi + rn + 1, qn - qi);
    }
    switch (ri) {
    case 0:
        return std::min(qi, qn - qi + rn + 1);
    case 1:
        return std::min(qi + 2, qn - qi + 2);
    default:
        return std::min(qi + 3, qn - qi + rn + 1);
    }
}

Index v0_inner(const ResidueContext& c, Index i) {
    // e^v_{n-1} = v_{n-1}v_2 wraps past v_0; reflect it onto e^v_{n-2} = v_{n-2}v_1.
    if (i == c.n - 1) {
        i = c.n - 2;
    }
    const auto [qi, ri] = decomp3(i);
    const Index qn = c.qn;
    const Index rn = c.rn;
    if (ri == rn) {
        return rn == 0 ? std::min(qi, qn - qi - 1) : std::min(qi + ri + 2, qn - qi + rn - ri - 1);
    }
    switch (ri) {
    case 0:
        return std::min(qi, qn - qi + rn + 1);
    case 1:
        return std::min(qi + 3, qn - qi + 2);
    default:
        return std::min(qi + 4, qn - qi + rn + 1);
    }
}

} // namespace

Index closed_vv(const ResidueContext& ctx, Anchor anchor, const Vertex& target) {
    require_range(ctx);
    Index i = mod(target.index, ctx.n);
    if (i > ctx.half()) {
        i = ctx.n - i;
    }
    if (anchor == Anchor::U0) {
        return target.layer == Layer::Outer ? uu(ctx, i) : uv(ctx, i);
    }
    return target.layer == Layer::Outer ? uv(ctx, i) : vv(ctx, i);
}

Index closed_ve(const ResidueContext& ctx, const Vertex& anchor, const Edge& e) {
    require_range(ctx);
    const Index i = mod(e.index - anchor.index, ctx.n);
    if (anchor.layer == Layer::Outer) {
        switch (e.kind) {
        case EdgeKind::OuterArc:
            return u0_outer(ctx, i);
        case EdgeKind::Spoke:
            return u0_spoke(ctx, i);
        case EdgeKind::InnerArc:
            return u0_inner(ctx, i);
        }
    }
    switch (e.kind) {
    case EdgeKind::OuterArc:
        return v0_outer(ctx, i);
    case EdgeKind::Spoke:
        return v0_spoke(ctx, i);
    case EdgeKind::InnerArc:
        break;
    }
    return v0_inner(ctx, i);
}

} // namespace gpedim
