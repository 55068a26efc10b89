#pragma once

#include "qcharrel/builders.hpp"

namespace qcr {

/// Sign vectors (+1/-1 entries) labelling spin-node series.
using Eps = std::vector<int>;

std::string eps_str(const Eps& e);  // "(++-+)"
Eps eps_parse(const std::string& s);

/// All 2^n sign vectors in lexicographic order (+ before -).
std::vector<Eps> all_eps(int n);

int minus_count(const Eps& e);

/// Parity class: number of -1 entries congruent to varsigma mod 2.
bool in_parity_class(const Eps& e, int varsigma);

/// Highest-weight monomial M_eps of the spin series, built by the
/// two-symbol recursion (type C from the rank-1 seed, type D from the
/// rank-2 seed; the D (-+) step contributes Y^{-1}[1, q^m] at length m).
LMonomial spin_monomial(LieType t, const Eps& e, int dBase = 0);

/// True when the library can construct the spin series of this context
/// exactly (C rank 2 via the B2 relabeling, D rank 4 via the node
/// reflections through the two spin nodes).
bool has_spin_provider(const AlgebraContext& ctx);

/// The spin series R^{(n)}_eps (type C) or R^{(n - parity)}_eps (type D),
/// every term of height <= relD. Throws when no provider exists.
GradedSeries spin_series(const AlgebraContext& ctx, const Eps& e, int relD,
                         int dBase = 0);

/// Pole-clearing polynomial multiplying the q-character in the definition
/// of the spin series: prod over minus positions psi_k <= psi_l (type C;
/// strict < for type D) of (1 - x_{psi_k} x_{psi_l}) times prod over
/// plus/minus positions phi_k > psi_l of (1 - x_{phi_k}^{-1} x_{psi_l}).
XSeries spin_normalizer(const AlgebraContext& ctx, const Eps& e);

/// Denominator of the conjectured ordinary character of L(M_eps):
/// prod_i (1 - x_i^{-2 e_i}) (type C only) * prod_{i<j} (1 - x_i^{-e_i} x_j^{-e_j}).
XSeries spin_char_denominator(const AlgebraContext& ctx, const Eps& e);

}  // namespace qcr
