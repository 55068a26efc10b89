#pragma once

#include "qcharrel/spin.hpp"

namespace qcr {

/// Decomposition of an increasing tuple J into the standard four index
/// families: alpha (i in J, bar i outside), beta (bar i in J, i outside),
/// sigma (both in J), eta (both outside), plus the 0 membership for type C.
struct TupleSplit {
    std::vector<int> alpha, beta, sigma, eta;  // ascending subsets of 1..n
    bool hasZero = false;

    int m() const { return static_cast<int>(alpha.size()); }
    int r() const { return static_cast<int>(beta.size()); }
    int u() const { return static_cast<int>(sigma.size()); }
    int v() const { return static_cast<int>(eta.size()); }
};

TupleSplit split_tuple(const AlgebraContext& ctx, const std::vector<BoxIndex>& J);

/// One admissible pair of sign vectors together with its disagreement split:
/// gamma = positions where (eps, eps') = (+,-), delta = (-,+).
struct SpinPair {
    Eps eps1, eps2;
    std::vector<int> gamma, delta;  // ascending
    int s() const { return static_cast<int>(gamma.size()); }
    int t() const { return static_cast<int>(delta.size()); }
};

/// All (eps, eps') with w1(eps) + w1(eps') = w2(J) and sigma contained in
/// gamma (the type C admissibility). The pairs agree (+ on alpha, - on beta)
/// and disagree exactly on sigma and eta; sigma goes to gamma, each eta
/// position choosing gamma or delta freely.
std::vector<SpinPair> condition_pairs_C(const AlgebraContext& ctx,
                                        const std::vector<BoxIndex>& J);

/// Type D pairs with both vectors in the parity class varsigma
/// (equivalently t = r + varsigma mod 2; requires v - u even).
std::vector<SpinPair> condition_pairs_D1(const AlgebraContext& ctx,
                                         const std::vector<BoxIndex>& J,
                                         int varsigma);

/// Type D pairs with eps in the odd and eps' in the even class
/// (requires v - u odd).
std::vector<SpinPair> condition_pairs_D2(const AlgebraContext& ctx,
                                         const std::vector<BoxIndex>& J);

}  // namespace qcr
