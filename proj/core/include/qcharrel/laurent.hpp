#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "qcharrel/series.hpp"

namespace qcr {

/// Exact multivariate Laurent polynomial in the x variables with big-integer
/// coefficients. Keys are canonical XWeights (sorted variables, nonzero
/// rational exponents -- half powers appear in the square-root weights of the
/// odd orthogonal series), and zero coefficients are never stored, so equality
/// is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(Int c);
    static LaurentPoly monomial(XWeight w, Int c = Int(1));
    /// c * x_var^exp as a single term.
    static LaurentPoly variable(int var, Rational exp = Rational(1), Int c = Int(1));

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::map<XWeight, Int>& terms() const { return t_; }
    Int coeff(const XWeight& w) const;

    void accumulate(const XWeight& w, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.t_ == b.t_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a.t_ == b.t_);
    }

    std::string str() const;  // "2 x1 x2^-1/2 - 1", "0" if zero

private:
    std::map<XWeight, Int> t_;
};

/// 1 + sign * x^w (the ubiquitous binomial factor). sign is +1 or -1.
LaurentPoly lp_binomial(int sign, const XWeight& w);
/// x^a - x^b.
LaurentPoly lp_mono_diff(const XWeight& a, const XWeight& b);

/// Substitute x_var = 0: terms with positive exponent of the variable drop,
/// terms not containing it stay. Throws if any term carries a negative
/// exponent of the variable (the substitution would not be defined).
LaurentPoly lp_set_zero(const LaurentPoly& p, int var);
/// Substitute x_var = 1: erase the variable and merge coefficients.
LaurentPoly lp_set_one(const LaurentPoly& p, int var);
/// Leading coefficient of p read as a Laurent polynomial in x_var: the terms
/// of maximal x_var-exponent with that power stripped. Equivalently,
/// substitute x_var = 1/w, clear w denominators and keep the w-constant part;
/// this is the x_var -> infinity specialization. Returns p itself when the
/// variable does not occur.
LaurentPoly lp_top_coeff(const LaurentPoly& p, int var);
/// Coefficient of x_var^k in p (terms of exponent exactly k, var stripped).
LaurentPoly lp_coeff_of(const LaurentPoly& p, int var, const Rational& k);

/// Quotient of Laurent polynomials. No gcd reduction is attempted; equality
/// is decided by cross-multiplication (exact mode) or random evaluation over
/// a large prime field (modp mode).
struct RationalFn {
    LaurentPoly num;
    LaurentPoly den;

    RationalFn() : num(LaurentPoly::constant(1)), den(LaurentPoly::constant(1)) {}

    static RationalFn of(LaurentPoly p);
    /// n/d; throws on an identically zero denominator.
    static RationalFn ratio(LaurentPoly n, LaurentPoly d);
    /// den/num; throws on an identically zero numerator.
    RationalFn reciprocal() const;
};

RationalFn operator*(const RationalFn& a, const RationalFn& b);
RationalFn operator/(const RationalFn& a, const RationalFn& b);
RationalFn operator+(const RationalFn& a, const RationalFn& b);
RationalFn operator-(const RationalFn& a, const RationalFn& b);

/// Modular arithmetic layer shared by pit_equal and by checks that evaluate
/// factored products point-wise instead of expanding them.
namespace modp {

constexpr std::uint64_t prime = (std::uint64_t(1) << 61) - 1;  // Mersenne

std::uint64_t mul(std::uint64_t a, std::uint64_t b);
/// base^exp for nonzero base; negative exponents act through exp mod (p-1).
std::uint64_t pow_signed(std::uint64_t base, long long exp);

/// Uniform draws on [1, p-1]. mt19937_64 output is bit-exact across
/// platforms; the explicit rejection step keeps the reduction unbiased
/// without relying on std::uniform_int_distribution (which is not portable).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t nonzero();

private:
    std::mt19937_64 eng_;
};

/// Fold the lcm of p's exponent denominators into L (for clearing fractional
/// powers by the substitution x_v = s_v^L).
long long fold_exponent_lcm(const LaurentPoly& p, long long L);

/// Value of p under x_v = point.at(v)^L; every exponent denominator must
/// divide L.
std::uint64_t eval(const LaurentPoly& p, const std::map<int, std::uint64_t>& point,
                   long long L);

}  // namespace modp

/// How to decide equality of two rational functions.
struct PitMode {
    bool exact = true;
    int trials = 3;
    std::uint64_t seed = 0;

    static PitMode exact_mode() { return PitMode{}; }
    static PitMode modp(int trials, std::uint64_t seed) {
        return PitMode{false, trials, seed};
    }
};

struct PitOutcome {
    bool equal = true;
    /// Empty when equal. Otherwise the first differing cross-multiplied
    /// monomial (exact mode) or the failing variable assignment (modp mode).
    std::string witness;
};

/// Polynomial-identity test: lhs == rhs as rational functions.
///
/// Exact mode cross-multiplies and compares Laurent polynomials structurally.
/// Modp mode evaluates both sides at `trials` random points over F_p with
/// p = 2^61 - 1 and compares n1*d2 with n2*d1; fractional exponents are
/// cleared first by the global substitution x_i = s_i^L, L the lcm of all
/// exponent denominators on either side. Points hitting a denominator zero
/// are resampled (bounded budget, then an error is thrown). Draws come from a
/// seeded mt19937_64 through an explicit rejection sampler, so a fixed seed
/// reproduces the same points on every platform.
PitOutcome pit_equal(const RationalFn& lhs, const RationalFn& rhs, const PitMode& mode);

}  // namespace qcr
