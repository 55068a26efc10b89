#pragma once

#include <string>
#include <vector>

#include "qcharrel/rational.hpp"

namespace qcr {

enum class LieType { A, B, C, D };

char type_letter(LieType t);
LieType type_from_letter(char c);

/// A box index labels a weight of the vector representation.
/// Encoding: +i = plain index i, -i = barred index i, 0 = the middle "0"
/// index (type C only). The barred companion of j is -j.
using BoxIndex = int;

inline BoxIndex bar(BoxIndex j) { return -j; }
inline int sgn(BoxIndex j) { return j > 0 ? 1 : (j < 0 ? -1 : 0); }

std::string box_str(BoxIndex j);           // "2", "2b", "0"
BoxIndex box_parse(const std::string& s);  // inverse of box_str

std::string tuple_str(const std::vector<BoxIndex>& J);  // "(1,2b)"
std::vector<BoxIndex> tuple_parse(const std::string& s);

/// Immutable per-type data: rank, index set, Cartan normalization, grading
/// weights. All z-shifts in this library are stored doubled (integer points
/// of the q^{1/2} lattice), so d_i are carried doubled as well.
class AlgebraContext {
public:
    AlgebraContext(LieType type, int rank);

    LieType type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const;  // "A2", "D4", ...

    /// Number of independent x variables (type A keeps n+1 variables with
    /// the product relation folded into weight normalization).
    int num_x() const { return num_x_; }

    int dual_coxeter() const { return dual_coxeter_; }

    /// Doubled d_i, i in 1..rank: q_i = q^{dd_i/2}.
    int dd(int i) const;
    /// Doubled d_1; the elementary shift q_1 of the determinant rows.
    int dd1() const { return dd(1); }

    /// The full index set in canonical written order, e.g. C2: 1,2,0,2b,1b.
    const std::vector<BoxIndex>& index_set() const { return index_set_; }

    /// Position of j in the canonical written order (0-based); throws if absent.
    int canonical_pos(BoxIndex j) const;
    bool valid_index(BoxIndex j) const;

    /// Strict partial order on box indices. Total except in type D where
    /// n and n-bar are incomparable.
    bool less(BoxIndex a, BoxIndex b) const;
    bool comparable(BoxIndex a, BoxIndex b) const { return less(a, b) || less(b, a); }

    /// Strictly increasing w.r.t. the canonical written order (the tuple
    /// enumeration order; in type D it places n immediately before n-bar).
    bool is_increasing(const std::vector<BoxIndex>& J) const;

    /// Complement J* = index_set \ J, in canonical order.
    std::vector<BoxIndex> complement(const std::vector<BoxIndex>& J) const;

    /// All strictly increasing a-tuples in canonical order.
    std::vector<std::vector<BoxIndex>> increasing_tuples(int a) const;

    /// Grading weight w_j of variable x_j (j = 1..num_x). The absolute height
    /// of an x-monomial Prod x_j^{v_j} is -Sum w_j v_j; each e^{-alpha_i} has
    /// height exactly 1.
    Rational grading_weight(int xvar) const;

private:
    LieType type_;
    int rank_;
    int num_x_;
    int dual_coxeter_;
    std::vector<BoxIndex> index_set_;
};

/// Sign prefactor c(j) used in the type-B determinant notation:
/// c(j) = (-1)^j for plain j, (-1)^(i-1) for j = i-bar.
int c_sign_B(BoxIndex j);

/// Signature of the permutation taking the canonical order to the
/// concatenation (J, J*). Computed by inversion counting.
int signature(const AlgebraContext& ctx, const std::vector<BoxIndex>& J);

/// Same signature via cycle-decomposition parity (independent oracle).
int signature_by_cycles(const AlgebraContext& ctx, const std::vector<BoxIndex>& J);

std::vector<BoxIndex> remove_at(const std::vector<BoxIndex>& J, int k);       // drop k-th (0-based)
std::vector<BoxIndex> prepend(BoxIndex j, const std::vector<BoxIndex>& J);

}  // namespace qcr
