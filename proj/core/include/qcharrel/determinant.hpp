#pragma once

#include "qcharrel/builders.hpp"

namespace qcr {

using SeriesMatrix = std::vector<std::vector<GradedSeries>>;

/// Determinant by signed permutation sum (small matrices).
GradedSeries det_leibniz(const SeriesMatrix& m);

/// Determinant by first-row cofactor expansion, memoized on column subsets.
GradedSeries det_cofactor(const SeriesMatrix& m);

/// Size-dispatching determinant (leibniz for <= 3, cofactor beyond).
GradedSeries det_series(const SeriesMatrix& m);

/// Minimal assignment cost min over permutations s of sum_r cost[r][s(r)].
/// Used to pick the entry truncation depth that makes a determinant exact
/// through a requested height.
Rational assignment_min(const std::vector<std::vector<Rational>>& cost);

/// Smallest integer >= coverTo - sMin, clamped at zero: the per-entry
/// truncation depth for a determinant whose entry scalars contribute at
/// least sMin to every term's height.
int entry_depth(const Rational& coverTo, const Rational& sMin);

/// Casorati determinant Q^(a)_{J, q^(dBase/2) z} =
///   det( Q^(1)_{j_nu, q1^(2 mu - a - 1) z} * x_{j_nu}^(mu - 1) )_{mu,nu=1..a},
/// exact through height coverTo (a repeated index gives the exact zero
/// series). The empty tuple gives the exact unit series.
GradedSeries casorati(const AlgebraContext& ctx, const std::vector<BoxIndex>& J,
                      const Rational& coverTo, int dBase = 0);

/// --- Alternative type-A representation (pure-Y root strings) ---

/// Q^(1)_{i, q^(dBase/2) z} rebuilt from the pure-Y monomials alt_a_inv:
/// independent of build_q1's construction; equality of the two is a strong
/// cross-check of the basic series.
GradedSeries q1_alt(const AlgebraContext& ctx, int i, int relD, int dBase = 0);

/// Closed form of the column-reduction series: for a < n+1-i a sum over
/// k_{i+1}..k_{n+1-a} of x-ratio powers times one alt_a_inv factor per
/// column j = i..n-a at shift 2j - 4*(suffix sum from j+1); exactly 1 at
/// a = n+1-i and exactly 0 beyond.
GradedSeries delta_closed(const AlgebraContext& ctx, int i, int a, int relD,
                          int dBase = 0);

/// The same series built by the defining recursion
///   D^(0) = Y_{n, q^(n+1) z} Q^(1)_i,
///   D^(a) = altA_{n+1-a, q^(n+1-a) z} (D^(a-1)_z - D^(a-1)_{q^-2 z} x_{n+2-a}/x_i).
GradedSeries delta_series(const AlgebraContext& ctx, int i, int a, int relD,
                          int dBase = 0);

/// The determinant form of Q^(a)_J built from the reduced columns:
///   Y^{-1}_{n+1-a, q^(n+1) z} det( D^(mu-1)_{j_nu, q^(2 mu - 1 - a) z}
///                                  * x_{j_nu}^(mu-1) ),
/// exact through coverTo. Type A only.
GradedSeries newrep_det(const AlgebraContext& ctx, const std::vector<BoxIndex>& J,
                        const Rational& coverTo, int dBase = 0);

}  // namespace qcr
