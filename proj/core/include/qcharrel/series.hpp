#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcharrel/monomial.hpp"

namespace qcr {

using Int = boost::multiprecision::cpp_int;

/// Extended height: a rational or +infinity (exact objects are valid at all
/// heights).
struct Height {
    bool inf = false;
    Rational v;

    static Height infinite() { return Height{true, Rational(0)}; }
    static Height of(Rational r) { return Height{false, r}; }

    friend Height min(const Height& a, const Height& b) {
        if (a.inf) return b;
        if (b.inf) return a;
        return a.v < b.v ? a : b;
    }
    Height operator+(const Rational& r) const {
        return inf ? *this : Height{false, v + r};
    }
    bool covers(const Rational& h) const { return inf || h <= v; }
    friend bool operator<(const Height& a, const Height& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.v < b.v;
    }
    friend bool operator==(const Height& a, const Height& b) {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
    std::string str() const { return inf ? "inf" : v.str(); }
};

/// Truncated series: finitely many monomial terms, all of absolute height
/// <= valid; the series is exact at every height <= valid.
class GradedSeries {
public:
    GradedSeries() = default;
    GradedSeries(const AlgebraContext* ctx, Height valid) : ctx_(ctx), valid_(valid) {}

    static GradedSeries zero(const AlgebraContext& ctx, Height valid = Height::infinite());
    static GradedSeries monomial(const AlgebraContext& ctx, const LMonomial& m,
                                 Int coeff = Int(1), Height valid = Height::infinite());

    const AlgebraContext& ctx() const { return *ctx_; }
    Height valid() const { return valid_; }
    const std::map<LMonomial, Int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    /// Minimal stored height (nullopt when no terms).
    std::optional<Rational> min_height() const;
    /// Minimal stored height, or the validity bound when empty (the sound
    /// lower bound on where a nonzero term could first appear).
    Rational eff_min() const;

    Int coeff(const LMonomial& m) const;

    /// Add c*m, keeping the term map trimmed to the validity bound.
    void accumulate(const LMonomial& m, const Int& c);

    GradedSeries truncated(Height newValid) const;

    /// True iff no nonzero term has height <= h (h must be covered by valid).
    bool is_zero_through(const Rational& h) const;
    /// First (height, then monomial order) nonzero term of height <= h.
    std::optional<std::pair<LMonomial, Int>> first_term_through(const Rational& h) const;

    std::string serialize(const std::string& label) const;

private:
    const AlgebraContext* ctx_ = nullptr;
    Height valid_ = Height::infinite();
    std::map<LMonomial, Int> terms_;

    friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
    friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    friend GradedSeries scale(const GradedSeries& s, const LMonomial& m, const Int& c);
    friend GradedSeries shift_z(const GradedSeries& s, int dDelta);
    friend GradedSeries neg(const GradedSeries& s);
};

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);
/// Product; the result is valid up to min(Va + minb, Vb + mina), which is the
/// exact region the stored convolution determines.
GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
GradedSeries scale(const GradedSeries& s, const LMonomial& m, const Int& c = Int(1));
GradedSeries shift_z(const GradedSeries& s, int dDelta);
GradedSeries neg(const GradedSeries& s);

/// Node relabeling transport between contexts: Y nodes are permuted, doubled
/// shifts offset, x-weights mapped by the lattice map induced by the
/// fundamental-weight relabeling. Grading heights are preserved.
struct NodeTransport {
    const AlgebraContext* from;
    const AlgebraContext* to;
    std::vector<int> nodePerm;                   // 1-based: node i -> nodePerm[i-1]
    int dOffset = 0;                             // added to every doubled shift
    std::vector<std::vector<Rational>> xmap;     // numX(to) x numX(from)
};

/// Build the transport for a Dynkin relabeling (perm of 1..rank); the x map
/// is solved from e_omega coordinates.
NodeTransport make_transport(const AlgebraContext& from, const AlgebraContext& to,
                             const std::vector<int>& nodePerm, int dOffset = 0);

XWeight transport_x(const NodeTransport& t, const XWeight& w);
GradedSeries transport(const NodeTransport& t, const GradedSeries& s);

/// Spectral-parameter-forgetting projection: drop all Y factors, keep the
/// x-weight. The image of a q-character series is its ordinary character.
class XSeries {
public:
    XSeries() = default;
    XSeries(const AlgebraContext* ctx, Height valid) : ctx_(ctx), valid_(valid) {}

    static XSeries zero(const AlgebraContext& ctx, Height valid = Height::infinite());
    static XSeries monomial(const AlgebraContext& ctx, const XWeight& w,
                            Int coeff = Int(1), Height valid = Height::infinite());

    const AlgebraContext& ctx() const { return *ctx_; }
    Height valid() const { return valid_; }
    const std::map<XWeight, Int>& terms() const { return terms_; }
    Rational eff_min() const;

    void accumulate(const XWeight& w, const Int& c);
    bool is_zero_through(const Rational& h) const;
    std::optional<std::pair<XWeight, Int>> first_term_through(const Rational& h) const;

    friend XSeries operator+(const XSeries& a, const XSeries& b);
    friend XSeries operator-(const XSeries& a, const XSeries& b);
    friend XSeries operator*(const XSeries& a, const XSeries& b);

private:
    const AlgebraContext* ctx_ = nullptr;
    Height valid_ = Height::infinite();
    std::map<XWeight, Int> terms_;
};

XSeries varpi(const GradedSeries& s);

/// Expansion of 1/(1 - sign*m) in the positive-height cone. Ratios of
/// negative height are rewritten through the reciprocal; zero-height ratios
/// are rejected.
XSeries expand_geometric(const AlgebraContext& ctx, int sign, const XWeight& m,
                         Height valid);

}  // namespace qcr
