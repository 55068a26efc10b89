#pragma once

#include <string>
#include <vector>

#include "qcharrel/algebra.hpp"
#include "qcharrel/rational.hpp"

namespace qcr {

/// Multiplicative weight in the x variables: sorted (variable, exponent)
/// pairs with nonzero rational exponents. Type A weights are kept in the
/// exponent-sum-zero gauge (the product-of-all-x relation).
struct XWeight {
    std::vector<std::pair<int, Rational>> e;

    bool is_trivial() const { return e.empty(); }
    Rational exponent(int var) const;

    friend bool operator==(const XWeight& a, const XWeight& b) { return a.e == b.e; }
    friend bool operator!=(const XWeight& a, const XWeight& b) { return !(a.e == b.e); }
    friend bool operator<(const XWeight& a, const XWeight& b);

    std::string str() const;  // "x1^2 x3^-1/2", "1" if trivial
};

XWeight x_mul(const XWeight& a, const XWeight& b);
XWeight x_inv(const XWeight& a);
XWeight x_pow(const XWeight& a, const Rational& k);

/// Raw single-variable weight x_var^exp (no gauge fixing).
XWeight x_var_pow(int var, Rational exp);

/// Apply the type-A sum-zero gauge (no-op for other types).
XWeight x_normalized(const AlgebraContext& ctx, XWeight w);

/// The weight "x_j^exp" of a box index: x_{i-bar} = x_i^{-1}, x_0 = 1.
/// Gauge-fixed for type A.
XWeight x_of_box(const AlgebraContext& ctx, BoxIndex j, Rational exp = Rational(1));

/// x_J = prod over entries of J.
XWeight x_of_tuple(const AlgebraContext& ctx, const std::vector<BoxIndex>& J,
                   Rational exp = Rational(1));

/// Fundamental-weight and simple-root weights as x-monomials.
XWeight e_omega(const AlgebraContext& ctx, int i);
XWeight e_alpha(const AlgebraContext& ctx, int i);

/// Absolute grading height of an x-weight: -sum_j w_j v_j, where w_j are the
/// context grading weights. Each e^{-alpha_i} has height exactly 1.
Rational abs_height(const AlgebraContext& ctx, const XWeight& w);

/// An x-weight carrying a sign, e.g. the product prefactors of the bilinear
/// identities (every factor there is -x^(...) or +x^(...)).
struct SignedX {
    int sign = 1;  // +1 or -1
    XWeight w;
};

SignedX sx_mul(const SignedX& a, const SignedX& b);

/// Prefactor X_J: product over pairs i < j in J (partial order) of
/// -x_i^(1/2 if j = i-bar else 0) * x_i^(-1).
SignedX big_x(const AlgebraContext& ctx, const std::vector<BoxIndex>& J);

/// Prefactor x_{i,J}: product over j in J with i < j of -x_i^(1 - del(j,i-bar)/2)
/// times product over j in J* with j < i of x_j^(del(i,j-bar)/2 - 1).
SignedX x_rel(const AlgebraContext& ctx, BoxIndex i, const std::vector<BoxIndex>& J);

/// One spectral-parameter factor Y[node, q^(d/2) z]^exp; d is the doubled
/// shift so that the q^(1/2) lattice is integral.
struct YFactor {
    int node;
    int d;
    int exp;
    friend bool operator==(const YFactor& a, const YFactor& b) {
        return a.node == b.node && a.d == b.d && a.exp == b.exp;
    }
    friend bool operator<(const YFactor& a, const YFactor& b) {
        if (a.node != b.node) return a.node < b.node;
        if (a.d != b.d) return a.d < b.d;
        return a.exp < b.exp;
    }
};

/// A term monomial: product of Y factors (canonically sorted, exponents
/// nonzero) and an x-weight.
struct LMonomial {
    std::vector<YFactor> y;
    XWeight x;

    bool y_trivial() const { return y.empty(); }

    friend bool operator==(const LMonomial& a, const LMonomial& b) {
        return a.y == b.y && a.x == b.x;
    }
    friend bool operator<(const LMonomial& a, const LMonomial& b);

    std::string str() const;  // "Y[1,3/2]^-1 Y[2,1] x1^-1", "1" if trivial
};

LMonomial lm_one();
LMonomial lm_y(int node, int d, int exp = 1);
LMonomial lm_x(const XWeight& w);
LMonomial lm_mul(const LMonomial& a, const LMonomial& b);
LMonomial lm_inv(const LMonomial& a);
LMonomial lm_shift_z(const LMonomial& a, int dDelta);

inline Rational lm_height(const AlgebraContext& ctx, const LMonomial& m) {
    return abs_height(ctx, m.x);
}

}  // namespace qcr
