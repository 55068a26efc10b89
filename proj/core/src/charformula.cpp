#include "qcharrel/charformula.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcharrel/builders.hpp"
#include "qcharrel/determinant.hpp"

namespace qcr {

namespace {

XWeight box_ratio(const AlgebraContext& ctx, BoxIndex k, BoxIndex j) {  // x_k / x_j
    return x_mul(x_of_box(ctx, k), x_of_box(ctx, j, Rational(-1)));
}

std::vector<BoxIndex> bar_reverse(const std::vector<BoxIndex>& J) {
    std::vector<BoxIndex> r;
    r.reserve(J.size());
    for (auto it = J.rbegin(); it != J.rend(); ++it) r.push_back(bar(*it));
    return r;
}

std::vector<BoxIndex> erase_value(std::vector<BoxIndex> J, BoxIndex j) {
    auto it = std::find(J.begin(), J.end(), j);
    if (it == J.end()) throw std::logic_error("erase_value: entry not present");
    J.erase(it);
    return J;
}

void require_type(const AlgebraContext& ctx, LieType t, const char* who) {
    if (ctx.type() != t)
        throw std::invalid_argument(std::string(who) + ": wrong algebra type " + ctx.name());
}

std::string pit_detail(const PitMode& mode) {
    if (mode.exact) return "exact";
    std::ostringstream os;
    os << "modp trials=" << mode.trials << " seed=" << mode.seed;
    return os.str();
}

CheckResult result_from(PitOutcome po, std::string detail) {
    CheckResult r;
    r.status = po.equal ? CheckStatus::pass : CheckStatus::fail;
    r.witness = std::move(po.witness);
    r.detail = std::move(detail);
    return r;
}

}  // namespace

RationalFn f_factor(const AlgebraContext& ctx, BoxIndex j, BoxIndex k) {
    if (j == k) throw std::domain_error("f_factor: coincident indices");
    XWeight ratio = box_ratio(ctx, k, j);
    LaurentPoly num = LaurentPoly::constant(Int(1));
    LaurentPoly den = lp_binomial(-1, ratio);
    switch (ctx.type()) {
        case LieType::A:
            break;
        case LieType::B:
            if (k == bar(j)) num = lp_binomial(+1, x_of_box(ctx, j, Rational(-1)));
            break;
        case LieType::C:
            if (k == 0) den *= lp_binomial(+1, ratio);
            break;
        case LieType::D:
            if (k == bar(j)) num = lp_binomial(-1, ratio);
            break;
    }
    return RationalFn::ratio(std::move(num), std::move(den));
}

RationalFn f_cross_product(const AlgebraContext& ctx, const std::vector<BoxIndex>& J) {
    RationalFn r;
    for (BoxIndex i : J)
        for (BoxIndex j : ctx.complement(J))
            if (ctx.less(i, j)) r = r * f_factor(ctx, i, j);
    return r;
}

RationalFn qbar_closed(const AlgebraContext& ctx, const std::vector<BoxIndex>& J) {
    RationalFn r = f_cross_product(ctx, J);
    for (BoxIndex i : J)
        for (BoxIndex j : J)
            if (ctx.less(i, j)) {
                RationalFn f = f_factor(ctx, i, j);
                f.num *= lp_mono_diff(x_of_box(ctx, j), x_of_box(ctx, i));
                r = r * f;
            }
    return r;
}

namespace {

/// Geometric expansion of qbar_closed through `valid`, asserting that every
/// ratio lies in the positive-height cone.
XSeries qbar_expanded(const AlgebraContext& ctx, const std::vector<BoxIndex>& J,
                      Height valid) {
    XSeries r = XSeries::monomial(ctx, XWeight{}, Int(1), valid);
    auto f_expansion = [&](BoxIndex i, BoxIndex j) {
        XWeight ratio = box_ratio(ctx, j, i);
        if (!(Rational(0) < abs_height(ctx, ratio)))
            throw std::logic_error("series_vs_char: ratio x_" + box_str(j) + "/x_" +
                                   box_str(i) + " is not in the positive-height cone");
        XSeries f = expand_geometric(ctx, +1, ratio, valid);
        switch (ctx.type()) {
            case LieType::A:
                break;
            case LieType::B:
                if (j == bar(i)) {
                    XSeries num = XSeries::monomial(ctx, XWeight{}, Int(1));
                    num.accumulate(x_of_box(ctx, i, Rational(-1)), Int(1));
                    f = f * num;
                }
                break;
            case LieType::C:
                if (j == 0) f = f * expand_geometric(ctx, -1, ratio, valid);
                break;
            case LieType::D:
                if (j == bar(i)) {
                    XSeries num = XSeries::monomial(ctx, XWeight{}, Int(1));
                    num.accumulate(ratio, Int(-1));
                    f = f * num;
                }
                break;
        }
        return f;
    };
    for (BoxIndex i : J)
        for (BoxIndex j : ctx.complement(J))
            if (ctx.less(i, j)) r = r * f_expansion(i, j);
    for (BoxIndex i : J)
        for (BoxIndex j : J)
            if (ctx.less(i, j)) {
                XSeries diffPoly = XSeries::monomial(ctx, x_of_box(ctx, j), Int(1));
                diffPoly.accumulate(x_of_box(ctx, i), Int(-1));
                r = r * diffPoly * f_expansion(i, j);
            }
    return r;
}

}  // namespace

CheckResult series_vs_char(const AlgebraContext& ctx, const std::vector<BoxIndex>& J,
                           const Rational& D) {
    CheckResult out;
    out.checkedTo = D;
    out.detail = ctx.name() + " J=" + tuple_str(J);
    XSeries diff;
    Rational cover = D;
    for (int attempt = 0;; ++attempt) {
        diff = varpi(casorati(ctx, J, cover, 0)) -
               qbar_expanded(ctx, J, Height::of(cover));
        if (diff.valid().covers(D)) break;
        if (attempt >= 8)
            throw std::runtime_error("series_vs_char: residual validity did not converge");
        cover += D - diff.valid().v + Rational(1);
    }
    if (auto t = diff.first_term_through(D)) {
        out.status = CheckStatus::fail;
        out.witness = t->second.str() + " * " + t->first.str();
    } else {
        out.status = CheckStatus::pass;
    }
    return out;
}

LaurentPoly h_poly(const AlgebraContext& ctx, const std::vector<BoxIndex>& J) {
    std::set<BoxIndex> in(J.begin(), J.end());
    LaurentPoly h = LaurentPoly::constant(Int(1));
    for (BoxIndex k : J) {
        if (k <= 0 || !in.count(bar(k))) continue;
        if (!ctx.less(k, bar(k))) continue;
        LaurentPoly pair = LaurentPoly::monomial(x_of_box(ctx, k, Rational(1, 2)));
        pair.accumulate(x_of_box(ctx, k, Rational(-1, 2)), Int(1));
        h *= pair;
    }
    return h;
}

RationalFn g_factor(const AlgebraContext& ctx, BoxIndex i, BoxIndex j) {
    Rational exp = j == bar(i) ? Rational(1, 2) : Rational(1);
    RationalFn g = f_factor(ctx, i, j);
    g.num *= LaurentPoly::monomial(x_of_box(ctx, j, exp));
    return g;
}

RationalFn g_tuple(const AlgebraContext& ctx, BoxIndex i,
                   const std::vector<BoxIndex>& J) {
    RationalFn r;
    for (BoxIndex k : J)
        if (k != i) r = r * g_factor(ctx, i, k);
    return r;
}

SignedX x_tilde(const AlgebraContext& ctx, BoxIndex i, const std::vector<BoxIndex>& J) {
    SignedX r{1, XWeight{}};
    for (BoxIndex k : J)
        if (ctx.less(k, i)) {
            Rational exp = i == bar(k) ? Rational(-1, 2) : Rational(-1);
            r = sx_mul(r, SignedX{-1, x_of_box(ctx, i, exp)});
        }
    for (BoxIndex k : ctx.complement(J))
        if (ctx.less(i, k)) {
            Rational exp = k == bar(i) ? Rational(1, 2) : Rational(1);
            r = sx_mul(r, SignedX{1, x_of_box(ctx, k, exp)});
        }
    return r;
}

CheckResult check_char_B(const AlgebraContext& ctx, const std::vector<BoxIndex>& J1,
                         const std::vector<BoxIndex>& J2, const PitMode& mode) {
    require_type(ctx, LieType::B, "check_char_B");
    if (static_cast<int>(J1.size()) != ctx.rank() ||
        static_cast<int>(J2.size()) != ctx.rank())
        throw std::invalid_argument("check_char_B: tuples must have size n");

    const auto J1s = ctx.complement(J1);
    const auto J2s = ctx.complement(J2);
    const auto J1sb = bar_reverse(J1s);
    const auto J2sb = bar_reverse(J2s);

    LaurentPoly lhs =
        LaurentPoly::monomial(x_of_tuple(ctx, J1, Rational(-1, 2))) *
            h_poly(ctx, J1sb) * h_poly(ctx, J2) -
        LaurentPoly::monomial(x_of_tuple(ctx, J2, Rational(-1, 2))) *
            h_poly(ctx, J2sb) * h_poly(ctx, J1);

    std::set<BoxIndex> inJ1s(J1s.begin(), J1s.end());
    RationalFn sum = RationalFn::of(LaurentPoly());
    for (BoxIndex j : J2) {
        if (!inJ1s.count(j)) continue;
        XWeight mono = x_mul(x_of_tuple(ctx, J1, Rational(3, 2)),
                             x_of_box(ctx, j, Rational(3, 2)));
        RationalFn term = RationalFn::of(LaurentPoly::monomial(mono)) *
                          g_tuple(ctx, j, J1s) / g_tuple(ctx, j, J2s);
        term.num *= h_poly(ctx, erase_value(J2, j)) *
                    h_poly(ctx, erase_value(J1sb, bar(j)));
        sum = sum + term;
    }
    XWeight pre = x_mul(x_of_tuple(ctx, J1, Rational(-1)),
                        x_of_tuple(ctx, J2, Rational(-1)));
    RationalFn rhs = RationalFn::of(LaurentPoly::monomial(pre)) * sum;

    CheckResult out = result_from(pit_equal(RationalFn::of(std::move(lhs)), rhs, mode),
                                  ctx.name() + " J1=" + tuple_str(J1) +
                                      " J2=" + tuple_str(J2) + " " + pit_detail(mode));
    return out;
}

// --- factored sums: exact expansion or point-wise modular evaluation ---

namespace {

struct FTerm {
    Int c;
    XWeight mono;
    std::vector<LaurentPoly> fs;
};
using FSum = std::vector<FTerm>;

LaurentPoly fsum_expand(const FSum& s) {
    LaurentPoly total;
    for (const auto& t : s) {
        LaurentPoly p = LaurentPoly::monomial(t.mono, t.c);
        for (const auto& f : t.fs) p *= f;
        total += p;
    }
    return total;
}

std::uint64_t fsum_eval(const FSum& s, const std::map<int, std::uint64_t>& pt,
                        long long L) {
    std::uint64_t acc = 0;
    for (const auto& t : s) {
        std::uint64_t v = modp::eval(LaurentPoly::monomial(t.mono, t.c), pt, L);
        for (const auto& f : t.fs) v = modp::mul(v, modp::eval(f, pt, L));
        acc = (acc + v) % modp::prime;
    }
    return acc;
}

PitOutcome fsum_compare(const FSum& a, const FSum& b, const PitMode& mode) {
    PitOutcome out;
    if (mode.exact) {
        LaurentPoly diff = fsum_expand(a) - fsum_expand(b);
        if (!diff.is_zero()) {
            out.equal = false;
            const auto& [w, c] = *diff.terms().begin();
            out.witness = c.str() + " * " + w.str();
        }
        return out;
    }
    std::set<int> vars;
    long long L = 1;
    auto collect = [&](const FSum& s) {
        for (const auto& t : s) {
            for (const auto& [v, e] : t.mono.e) {
                vars.insert(v);
                L = lcm_ll(L, e.den);
            }
            for (const auto& f : t.fs) {
                L = modp::fold_exponent_lcm(f, L);
                for (const auto& [w, c] : f.terms())
                    for (const auto& [v, e] : w.e) vars.insert(v);
            }
        }
    };
    collect(a);
    collect(b);
    modp::Sampler rng(mode.seed);
    for (int trial = 0; trial < mode.trials; ++trial) {
        std::map<int, std::uint64_t> pt;
        for (int v : vars) pt[v] = rng.nonzero();
        if (fsum_eval(a, pt, L) != fsum_eval(b, pt, L)) {
            out.equal = false;
            std::ostringstream w;
            w << "trial " << trial << ":";
            for (const auto& [v, sv] : pt) w << " s" << v << "=" << sv;
            out.witness = w.str();
            return out;
        }
    }
    return out;
}

XWeight var1(int v) { return x_var_pow(v, Rational(1)); }

LaurentPoly one_minus_prod(int v1, int v2) {  // 1 - x_{v1} x_{v2}
    return lp_binomial(-1, x_mul(var1(v1), var1(v2)));
}

LaurentPoly var_diff(int v1, int v2) {  // x_{v1} - x_{v2}
    return lp_mono_diff(var1(v1), var1(v2));
}

}  // namespace

LaurentPoly fg_F(int m, int n) {
    LaurentPoly F = LaurentPoly::constant(Int(1));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) F *= one_minus_prod(i, j);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            F *= one_minus_prod(m + i, m + j) * var_diff(m + j, m + i);
    return F;
}

LaurentPoly fg_G(int m, int n, unsigned j2Mask) {
    LaurentPoly G = LaurentPoly::constant(Int(1));
    auto inJ2 = [&](int j) { return (j2Mask >> (j - 1)) & 1u; };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            G *= inJ2(j) ? var_diff(i, m + j) : one_minus_prod(i, m + j);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (!inJ2(i) && !inJ2(j)) G *= var_diff(m + j, m + i);
            if (inJ2(i) && inJ2(j)) G *= var_diff(m + i, m + j);
            if (inJ2(i) != inJ2(j)) G *= one_minus_prod(m + i, m + j);
        }
    return G;
}

int fg_delta(int n, unsigned j2Mask) {
    int d = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!((j2Mask >> (i - 1)) & 1u) && ((j2Mask >> (j - 1)) & 1u)) ++d;
    return d;
}

namespace {

FSum fg_rhs(int m, int n, int epsSign, bool withYMono) {
    FSum rhs;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        FTerm t;
        int sz2 = __builtin_popcount(mask);
        Int sign = (fg_delta(n, mask) % 2 == 0) ? Int(1) : Int(-1);
        if (epsSign < 0 && sz2 % 2 == 1) sign = -sign;
        t.c = sign;
        if (withYMono)
            for (int j = 1; j <= n; ++j)
                if ((mask >> (j - 1)) & 1u) t.mono = x_mul(t.mono, var1(m + j));
        t.fs.push_back(fg_G(m, n, mask));
        rhs.push_back(std::move(t));
    }
    return rhs;
}

}  // namespace

CheckResult check_FG1(int m, int n, const PitMode& mode) {
    if (n < 2 || m < 0 || m > n || (n - m) % 2 != 0)
        throw std::invalid_argument("check_FG1: need n >= 2, 0 <= m <= n, m == n mod 2");
    FSum lhs;
    if (m == n) {
        FTerm t;
        t.c = Int(1);
        for (int j = 1; j <= n; ++j)
            t.fs.push_back(lp_binomial(-1, x_var_pow(m + j, Rational(2))));
        t.fs.push_back(fg_F(m, n));
        lhs.push_back(std::move(t));
    }
    std::ostringstream d;
    d << "FG1 m=" << m << " n=" << n << " " << pit_detail(mode);
    return result_from(fsum_compare(lhs, fg_rhs(m, n, +1, true), mode), d.str());
}

CheckResult check_FG2(int m, int n, int epsSign, const PitMode& mode) {
    if (n < 3 || m < 0 || m > n - 1 || (epsSign != 1 && epsSign != -1))
        throw std::invalid_argument("check_FG2: need n >= 3, 0 <= m <= n-1, eps = +-1");
    FSum lhs;
    if (m == n - 1 && epsSign == 1) {
        FTerm t;
        t.c = Int(2);
        for (int i = 1; i <= m; ++i)
            t.fs.push_back(lp_binomial(-1, x_var_pow(i, Rational(2))));
        t.fs.push_back(fg_F(m, n));
        lhs.push_back(std::move(t));
    }
    std::ostringstream d;
    d << "FG2 m=" << m << " n=" << n << " eps=" << (epsSign > 0 ? "+" : "-") << " "
      << pit_detail(mode);
    return result_from(fsum_compare(lhs, fg_rhs(m, n, epsSign, false), mode), d.str());
}

// --- spin-node character identities, cleared over the common denominator ---

namespace {

Int half_product_sign(int k, int shift) {
    // (-1)^(k(k+shift)/2)
    int e = (k * (k + shift) / 2) % 2;
    return e == 0 ? Int(1) : Int(-1);
}

void add_internal_diffs(std::vector<LaurentPoly>& fs, const std::vector<int>& part) {
    for (std::size_t a = 0; a < part.size(); ++a)
        for (std::size_t b = a + 1; b < part.size(); ++b) {
            fs.push_back(var_diff(part[a], part[b]));
            fs.push_back(var_diff(part[b], part[a]));
        }
}

/// Numerator cofactor D*/den for a sum-side term with parts (gamma, delta):
/// its denominator holds the within-part (1 - x_i x_j) and the
/// (gamma, delta)-ordered differences, so the cofactor keeps the cross
/// products and every other ordered difference.
std::vector<LaurentPoly> term_cofactor(const std::vector<int>& gamma,
                                       const std::vector<int>& delta) {
    std::vector<LaurentPoly> fs;
    for (int i : gamma)
        for (int j : delta) fs.push_back(one_minus_prod(i, j));
    add_internal_diffs(fs, gamma);
    add_internal_diffs(fs, delta);
    for (int i : delta)
        for (int j : gamma) fs.push_back(var_diff(i, j));
    return fs;
}

/// Numerator cofactor D*/den for the product side with parts (sigma, eta):
/// its denominator holds the cross (1 - x_i x_j) and the (sigma, eta)-ordered
/// differences, complementary to the sum-side structure.
std::vector<LaurentPoly> product_cofactor(const std::vector<int>& sigma,
                                          const std::vector<int>& eta) {
    std::vector<LaurentPoly> fs;
    auto add_internal_prods = [&](const std::vector<int>& part) {
        for (std::size_t a = 0; a < part.size(); ++a)
            for (std::size_t b = a + 1; b < part.size(); ++b)
                fs.push_back(one_minus_prod(part[a], part[b]));
    };
    add_internal_prods(sigma);
    add_internal_prods(eta);
    add_internal_diffs(fs, sigma);
    add_internal_diffs(fs, eta);
    for (int i : eta)
        for (int j : sigma) fs.push_back(var_diff(i, j));
    return fs;
}

struct ChSpec {
    int etaOffset;        // #eta - #sigma
    int signShift;        // k(k+signShift)/2 exponents on both sides
    int lhsMonoPow;       // power of x_sigma on the left (0, 1 or 2)
    bool rhsMonoGamma;    // right-side monomial on gamma (true) or delta/none
    int rhsMonoPow;       // power of the right-side monomial
    bool rhsSignOnS;      // sign exponent uses s = #gamma (true) or t = #delta
    bool lhsEtaSquares;   // prod (1 - x_eta^2)
    bool lhsSigmaSquares; // prod (1 - x_sigma^2)
    bool lhsSplitLinear;  // prod (1 - x_sigma) prod (1 + x_eta)
};

ChSpec ch_spec_C(int variant) {
    switch (variant) {
        case 1: return {1, +1, 2, true, 2, true, true, false, false};
        case 2: return {2, -1, 2, true, 2, true, false, false, true};
        case 3: return {0, +1, 1, true, 1, true, true, false, false};
        case 4: return {1, -1, 1, true, 1, true, false, false, true};
        default: throw std::invalid_argument("ch_sides_C: variant must be 1..4");
    }
}

ChSpec ch_spec_D(int variant) {
    switch (variant) {
        case 1: return {2, +1, 1, false, 1, false, false, true, false};
        case 2: return {1, -1, 0, false, 0, true, false, true, false};
        default: throw std::invalid_argument("ch_sides_D: variant must be 1..2");
    }
}

/// Both sides of a spin-node identity, cleared over the common denominator
/// and kept in factored form.
std::pair<FSum, FSum> ch_fsums(const ChSpec& spec, const std::vector<int>& sigma,
                               const std::vector<int>& eta, int parity) {
    const int u = static_cast<int>(sigma.size());
    if (static_cast<int>(eta.size()) != u + spec.etaOffset)
        throw std::invalid_argument("spin character identity: wrong eta size");
    for (int i : sigma)
        for (int j : eta)
            if (i == j)
                throw std::invalid_argument("spin character identity: sigma, eta overlap");

    FSum lhs;
    {
        FTerm t;
        t.c = half_product_sign(u, spec.signShift);
        for (int i : sigma)
            t.mono = x_mul(t.mono, x_var_pow(i, Rational(spec.lhsMonoPow)));
        t.fs = product_cofactor(sigma, eta);
        if (spec.lhsEtaSquares)
            for (int j : eta) t.fs.push_back(lp_binomial(-1, x_var_pow(j, Rational(2))));
        if (spec.lhsSigmaSquares)
            for (int i : sigma)
                t.fs.push_back(lp_binomial(-1, x_var_pow(i, Rational(2))));
        if (spec.lhsSplitLinear) {
            for (int i : sigma) t.fs.push_back(lp_binomial(-1, var1(i)));
            for (int j : eta) t.fs.push_back(lp_binomial(+1, var1(j)));
        }
        lhs.push_back(std::move(t));
    }

    // Sum side: gamma = sigma u T, delta = eta \ T over subsets T of eta.
    FSum rhs;
    for (unsigned mask = 0; mask < (1u << eta.size()); ++mask) {
        std::vector<int> gamma = sigma, delta;
        for (std::size_t b = 0; b < eta.size(); ++b)
            ((mask >> b) & 1u ? gamma : delta).push_back(eta[b]);
        std::sort(gamma.begin(), gamma.end());
        const int s = static_cast<int>(gamma.size());
        const int t = static_cast<int>(delta.size());
        if (parity >= 0 && s % 2 != parity) continue;
        FTerm term;
        term.c = half_product_sign(spec.rhsSignOnS ? s : t, spec.signShift);
        if (spec.rhsMonoPow > 0)
            for (int i : spec.rhsMonoGamma ? gamma : delta)
                term.mono = x_mul(term.mono, x_var_pow(i, Rational(spec.rhsMonoPow)));
        term.fs = term_cofactor(gamma, delta);
        rhs.push_back(std::move(term));
    }
    return {std::move(lhs), std::move(rhs)};
}

PitOutcome ch_compare(const ChSpec& spec, const std::vector<int>& sigma,
                      const std::vector<int>& eta, int parity, const PitMode& mode) {
    auto [lhs, rhs] = ch_fsums(spec, sigma, eta, parity);
    return fsum_compare(lhs, rhs, mode);
}

std::string subset_str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

ChSides ch_sides_C(int variant, const std::vector<int>& sigma,
                   const std::vector<int>& eta) {
    auto [lhs, rhs] = ch_fsums(ch_spec_C(variant), sigma, eta, -1);
    return ChSides{fsum_expand(lhs), fsum_expand(rhs)};
}

ChSides ch_sides_D(int variant, const std::vector<int>& sigma,
                   const std::vector<int>& eta, int parity) {
    if (parity != 0 && parity != 1)
        throw std::invalid_argument("ch_sides_D: parity must be 0 or 1");
    auto [lhs, rhs] = ch_fsums(ch_spec_D(variant), sigma, eta, parity);
    return ChSides{fsum_expand(lhs), fsum_expand(rhs)};
}

CheckResult check_chC(int variant, const std::vector<int>& sigma,
                      const std::vector<int>& eta, const PitMode& mode) {
    PitOutcome po = ch_compare(ch_spec_C(variant), sigma, eta, -1, mode);
    CheckResult r = result_from(std::move(po), "chC" + std::to_string(variant) +
                                                  " sigma=" + subset_str(sigma) +
                                                  " eta=" + subset_str(eta) + " " +
                                                  pit_detail(mode));
    if (r.status == CheckStatus::pass) r.status = CheckStatus::conditional_pass;
    return r;
}

CheckResult check_chD(int variant, const std::vector<int>& sigma,
                      const std::vector<int>& eta, int parity, const PitMode& mode) {
    if (parity != 0 && parity != 1)
        throw std::invalid_argument("check_chD: parity must be 0 or 1");
    PitOutcome po = ch_compare(ch_spec_D(variant), sigma, eta, parity, mode);
    CheckResult r = result_from(
        std::move(po), "chD" + std::to_string(variant) + " sigma=" + subset_str(sigma) +
                           " eta=" + subset_str(eta) + " parity=" +
                           std::to_string(parity) + " " + pit_detail(mode));
    if (r.status == CheckStatus::pass) r.status = CheckStatus::conditional_pass;
    return r;
}

CheckResult check_weyl(LieType t, int n, int epsSign, const PitMode& mode) {
    if (t != LieType::C && t != LieType::D)
        throw std::invalid_argument("check_weyl: type must be C or D");
    if (n < 1 || n > 7) throw std::invalid_argument("check_weyl: rank out of range");
    if (t == LieType::D && epsSign != 1 && epsSign != -1)
        throw std::invalid_argument("check_weyl: eps must be +-1");

    auto entry = [&](int i, int j) {  // 1-based
        LaurentPoly e;
        if (t == LieType::C) {
            e = LaurentPoly::monomial(x_var_pow(i, Rational(-n + j - 1)));
            e.accumulate(x_var_pow(i, Rational(n - j + 1)), Int(-1));
        } else {
            e = LaurentPoly::monomial(x_var_pow(i, Rational(-n + j)));
            e.accumulate(x_var_pow(i, Rational(n - j)), Int(epsSign));
        }
        return e;
    };
    // Leibniz expansion of the n x n determinant.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    LaurentPoly det;
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inv;
        LaurentPoly p = LaurentPoly::constant(inv % 2 == 0 ? Int(1) : Int(-1));
        for (int i = 1; i <= n; ++i) p *= entry(i, perm[i - 1]);
        det += p;
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Clearing monomial: entry exponents span [-n, n] per variable in the
    // first family and [-n+1, n-1] in the second.
    const int clear = t == LieType::C ? n : n - 1;
    XWeight yAll;
    for (int j = 1; j <= n; ++j) yAll = x_mul(yAll, x_var_pow(j, Rational(clear)));
    LaurentPoly lhs = LaurentPoly::monomial(yAll) * det;

    LaurentPoly rhs = LaurentPoly::constant(t == LieType::C ? Int(1)
                                                            : Int(1 + epsSign));
    if (t == LieType::C)
        for (int j = 1; j <= n; ++j) rhs *= lp_binomial(-1, x_var_pow(j, Rational(2)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) rhs *= one_minus_prod(i, j) * var_diff(j, i);

    std::ostringstream d;
    d << "weyl " << type_letter(t) << n;
    if (t == LieType::D) d << " eps=" << (epsSign > 0 ? "+" : "-");
    d << " " << pit_detail(mode);
    return result_from(
        pit_equal(RationalFn::of(std::move(lhs)), RationalFn::of(std::move(rhs)), mode),
        d.str());
}

RationalFn expected_spin_char(const AlgebraContext& ctx, const Eps& e) {
    if (ctx.type() != LieType::C && ctx.type() != LieType::D)
        throw std::invalid_argument("expected_spin_char: type must be C or D");
    if (static_cast<int>(e.size()) != ctx.rank())
        throw std::invalid_argument("expected_spin_char: eps size must equal rank");
    LaurentPoly den = LaurentPoly::constant(Int(1));
    const int n = ctx.rank();
    if (ctx.type() == LieType::C)
        for (int i = 1; i <= n; ++i)
            den *= lp_binomial(-1, x_var_pow(i, Rational(-2 * e[i - 1])));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            den *= lp_binomial(-1, x_mul(x_var_pow(i, Rational(-e[i - 1])),
                                         x_var_pow(j, Rational(-e[j - 1]))));
    return RationalFn::ratio(LaurentPoly::constant(Int(1)), std::move(den));
}

}  // namespace qcr
