#pragma once

#include "qcharrel/series.hpp"

namespace qcr {

/// Shared immutable context registry (series keep pointers; contexts built
/// here live for the program duration).
const AlgebraContext& context(LieType t, int rank);

/// Cartan matrix entry c_ij of the underlying finite type.
int cartan(const AlgebraContext& ctx, int i, int j);

/// The generator monomial A^{-1}_{node, q^(d/2) z}: carries e^{-alpha_node}
/// in its x-part plus the standard Y-factor cloud of its Cartan column.
LMonomial gen_a_inv(const AlgebraContext& ctx, int node, int d);

/// The pure-Y root monomial used by the alternative type-A representation:
/// script-A^{-1}_{node, q^(d/2) z} (no x-part).
LMonomial alt_a_inv(const AlgebraContext& ctx, int node, int d);

/// Leading factor of the basic series for box b (pure Y). Type C's 0 index
/// has two leading pieces; use q1_hat_prefix for those.
LMonomial phi(const AlgebraContext& ctx, BoxIndex b);

/// Leading factor of the C-type middle pieces (includes the x_n^{-1} prefix
/// on the barred piece).
LMonomial q1_hat_prefix(const AlgebraContext& ctx, bool barredZero);

/// Basic series Q^(1)_{b, q^(dBase/2) z}, every term of absolute height
/// <= relD included (validity == relD).
GradedSeries build_q1(const AlgebraContext& ctx, BoxIndex b, int relD, int dBase = 0);

/// The two middle-weight pieces of type C's Q^(1)_0 (their sum is build_q1(0)).
GradedSeries build_q1_hat(const AlgebraContext& ctx, bool barredZero, int relD,
                          int dBase = 0);

/// Product of leading factors at the determinant's staggered shifts:
/// prod_k phi(j_k) at q1^(a+1-2k) z.
LMonomial phi_tuple(const AlgebraContext& ctx, const std::vector<BoxIndex>& J);

}  // namespace qcr
