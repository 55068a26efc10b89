#pragma once

#include "qcharrel/identities.hpp"
#include "qcharrel/laurent.hpp"

namespace qcr {

/// Pairwise character factor f_{j,k} of the ordered pair (j, k), j != k:
///   A: 1 / (1 - x_k/x_j)
///   B: (1 + del(k,jbar) x_j^-1) / (1 - x_k/x_j)
///   C: 1 / ((1 - x_k/x_j)(1 + del(k,0) x_k/x_j))
///   D: (1 - del(k,jbar) x_k/x_j) / (1 - x_k/x_j).
RationalFn f_factor(const AlgebraContext& ctx, BoxIndex j, BoxIndex k);

/// prod over i in J, j in J*, i < j of f_{i,j} (incomparable pairs skipped).
RationalFn f_cross_product(const AlgebraContext& ctx, const std::vector<BoxIndex>& J);

/// Closed ordinary character of the level-a determinant series:
///   varpi(Q^(a)_J) = f_cross_product(J) * prod_{i<j in J} ((x_j - x_i) f_{i,j}).
RationalFn qbar_closed(const AlgebraContext& ctx, const std::vector<BoxIndex>& J);

/// Compare the character projection of the Casorati determinant against the
/// geometric expansion of qbar_closed through height D. Every expansion ratio
/// is required to have strictly positive height (throws otherwise, rather
/// than silently expanding in the wrong cone).
CheckResult series_vs_char(const AlgebraContext& ctx, const std::vector<BoxIndex>& J,
                           const Rational& D);

// --- Building blocks of the type-B character identity ---

/// h_J = prod over mirror pairs k, kbar in J with k < kbar of
/// (x_k^(1/2) + x_k^(-1/2)). Depends only on the mirror-pair content, so it
/// is invariant under barring the tuple.
LaurentPoly h_poly(const AlgebraContext& ctx, const std::vector<BoxIndex>& J);

/// g_{i,j} = f_{i,j} * x_j^(1 - del(j,ibar)/2); antisymmetric in (i, j).
RationalFn g_factor(const AlgebraContext& ctx, BoxIndex i, BoxIndex j);

/// g_{i,J} = prod over k in J, k != i, of g_{i,k}.
RationalFn g_tuple(const AlgebraContext& ctx, BoxIndex i,
                   const std::vector<BoxIndex>& J);

/// Signed monomial xtilde_{i,J} = prod_{k in J, k < i} (-x_i^(del(i,kbar)/2 - 1))
/// * prod_{k in J*, i < k} x_k^(1 - del(k,ibar)/2).
SignedX x_tilde(const AlgebraContext& ctx, BoxIndex i, const std::vector<BoxIndex>& J);

/// Last-node bilinear identity at the character level (type B), for
/// increasing n-tuples J1, J2:
///   x_{J1}^(-1/2) h_{J1bar*} h_{J2} - x_{J2}^(-1/2) h_{J2bar*} h_{J1}
///     = x_{J1}^(-1) x_{J2}^(-1) sum_{j in J2 cap J1*} x_{J1}^(3/2) x_j^(3/2)
///       (g_{j,J1*} / g_{j,J2*}) h_{J2 - j} h_{J1bar* - jbar}.
CheckResult check_char_B(const AlgebraContext& ctx, const std::vector<BoxIndex>& J1,
                         const std::vector<BoxIndex>& J2, const PitMode& mode);

// --- Free two-family polynomial identities behind the spin-node conjectures ---

/// F^(m,n)(x, y) = prod_{i<j<=m}(1 - x_i x_j)
///               * prod_{i<j<=n}(1 - y_i y_j)(y_j - y_i),
/// with x_i on variables 1..m and y_j on variables m+1..m+n.
LaurentPoly fg_F(int m, int n);

/// G^(m,n)_{J1,J2}(x, y) for the partition J1 u J2 = {1..n} encoded by
/// j2Mask (bit j-1 set <=> j in J2); same variable numbering as fg_F.
LaurentPoly fg_G(int m, int n, unsigned j2Mask);

/// delta(J1, J2) = #{(i, j) in J1 x J2 : i < j}.
int fg_delta(int n, unsigned j2Mask);

/// First summation identity: del(m,n) prod_j (1 - y_j^2) F^(m,n)
///   = sum over partitions of (-1)^delta prod_{j in J2} y_j G^(m,n).
/// Requires n >= 2, 0 <= m <= n, m == n mod 2.
CheckResult check_FG1(int m, int n, const PitMode& mode);

/// Second summation identity: (1 + eps) del(m,n-1) prod_i (1 - x_i^2) F^(m,n)
///   = sum over partitions of eps^#J2 (-1)^delta G^(m,n).
/// Requires n >= 3, 0 <= m <= n-1, epsSign = +-1.
CheckResult check_FG2(int m, int n, int epsSign, const PitMode& mode);

/// Both sides of a spin-node character identity, cleared to Laurent
/// polynomials over the common denominator
///   prod_{i<j in S} (1 - x_i x_j) * prod_{i != j in S} (x_i - x_j), S = sigma u eta.
struct ChSides {
    LaurentPoly lhs, rhs;
};

/// Character identities of the symplectic spin node, variants 1..4. sigma and
/// eta are disjoint increasing subsets of {1..n} with sizes (u, u+1), (u, u+2),
/// (u, u), (u, u+1) respectively. The right side sums over partitions
/// gamma u delta of sigma u eta with sigma contained in gamma.
ChSides ch_sides_C(int variant, const std::vector<int>& sigma,
                   const std::vector<int>& eta);

/// Character identities of the orthogonal spin nodes, variants 1..2, sizes
/// (u, u+2) and (u, u+1). The partition sum is restricted to the parity class
/// #gamma == parity (mod 2); the identity holds for each class separately.
ChSides ch_sides_D(int variant, const std::vector<int>& sigma,
                   const std::vector<int>& eta, int parity);

/// The identity checks over the cleared sides. Successful verdicts report
/// conditional-pass: the identities certify the bilinear spin-node relations
/// only jointly with the conjectured spin characters.
CheckResult check_chC(int variant, const std::vector<int>& sigma,
                      const std::vector<int>& eta, const PitMode& mode);
CheckResult check_chD(int variant, const std::vector<int>& sigma,
                      const std::vector<int>& eta, int parity, const PitMode& mode);

/// Denominator formulas used to anchor the two-family identities:
///   C: prod_j y_j^n det(y_i^(-n+j-1) - y_i^(n-j+1))
///        = prod_j (1 - y_j^2) prod_{i<j} (1 - y_i y_j)(y_j - y_i),
///   D: prod_j y_j^n det(y_i^(-n+j) + eps y_i^(n-j))
///        = (1 + eps) prod_{i<j} (1 - y_i y_j)(y_j - y_i), eps = +-1.
/// epsSign is ignored for type C.
CheckResult check_weyl(LieType t, int n, int epsSign, const PitMode& mode);

/// Conjectured closed ordinary character of the spin series, normalized to
/// leading term 1:
///   C: prod_i 1/(1 - x_i^(-2 eps_i)) * prod_{i<j} 1/(1 - x_i^(-eps_i) x_j^(-eps_j)),
///   D: prod_{i<j} 1/(1 - x_i^(-eps_i) x_j^(-eps_j)).
RationalFn expected_spin_char(const AlgebraContext& ctx, const Eps& e);

}  // namespace qcr
