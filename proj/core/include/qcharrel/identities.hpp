#pragma once

#include <string>
#include <vector>

#include "qcharrel/determinant.hpp"
#include "qcharrel/spin.hpp"

namespace qcr {

/// Outcome of one identity check at one parameter point.
enum class CheckStatus { pass, fail, conditional_pass, skipped };

std::string status_str(CheckStatus s);

struct CheckResult {
    CheckStatus status = CheckStatus::skipped;
    /// Height through which the residual was certified (meaningful for
    /// pass/fail verdicts).
    Rational checkedTo = Rational(0);
    /// First offending residual term, empty unless status == fail.
    std::string witness;
    /// Supplementary information: skip reasons, parameter echoes.
    std::string detail;
};

/// det(Q^(1) with staggered spectral shifts and x-power gauge) == 1 for the
/// type-A column tuple (1, ..., n+1), verified through height D.
CheckResult check_wronskian(const AlgebraContext& ctx, const Rational& D);

/// Exchange relation between neighbouring exterior levels: for increasing
/// tuples J1, J2 of equal size a,
///   Q_{J1, q1^-1 z} Q_{J2, q1 z} - Q_{J1, q1 z} Q_{J2, q1^-1 z} x_{J1}/x_{J2}
///     = sum_k (-1)^k Q_{J2 - j_k, z} Q_{(j_k, J1), z} x_{j_k}^-1.
/// With mutateSign set, the k = 1 summand enters with the opposite sign; the
/// mutated relation is expected to fail (used as a self-test of the harness).
CheckResult check_plucker(const AlgebraContext& ctx, const std::vector<BoxIndex>& J1,
                          const std::vector<BoxIndex>& J2, const Rational& D,
                          bool mutateSign = false);

/// Column-reduced determinant levels (type A): recursion vs closed form.
CheckResult check_delta_simplify(const AlgebraContext& ctx, int i, int a,
                                 const Rational& D);

/// Reduced-determinant representation vs the defining determinant (type A).
CheckResult check_newrep_det(const AlgebraContext& ctx, const std::vector<BoxIndex>& J,
                             const Rational& D);

/// Last-node bilinear identity for type B: increasing n-tuples J1, J2.
CheckResult check_bn_conj(const AlgebraContext& ctx, const std::vector<BoxIndex>& J1,
                          const std::vector<BoxIndex>& J2, const Rational& D);

/// Spin-node bilinear identities for type C, variants 1-4 distinguished by
/// the tuple size (n-1 vs n) and whether 0 is an entry. Skips when no
/// spin-series provider exists for the rank.
CheckResult check_cn_conj(const AlgebraContext& ctx, int variant,
                          const std::vector<BoxIndex>& J, const Rational& D);

/// The two rank-2 identities coupling the split middle series
/// (0 and 0-bar separately) to spin series. which is 1 or 2.
CheckResult check_cn_remark(const AlgebraContext& ctx, int which, const Rational& D);

/// Spin-node bilinear identities for type D. conj1 takes an increasing
/// (n-2)-tuple and a parity class varsigma; conj2 an increasing (n-1)-tuple.
CheckResult check_dn_conj1(const AlgebraContext& ctx, const std::vector<BoxIndex>& J,
                           int varsigma, const Rational& D);
CheckResult check_dn_conj2(const AlgebraContext& ctx, const std::vector<BoxIndex>& J,
                           const Rational& D);

/// The spin series starts with exactly the monomial produced by the
/// highest-weight recursion.
CheckResult check_spin_lead(const AlgebraContext& ctx, const Eps& e);

/// Conjectured ordinary character of the spin series: the x-projection times
/// the closed-form denominator equals the normalizer polynomial through D.
CheckResult check_spin_char(const AlgebraContext& ctx, const Eps& e, const Rational& D);

}  // namespace qcr
