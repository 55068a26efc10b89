#include "qcharrel/spin.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcr {

std::string eps_str(const Eps& e) {
    std::string s = "(";
    for (int v : e) s += v > 0 ? '+' : '-';
    return s + ")";
}

Eps eps_parse(const std::string& s) {
    Eps e;
    for (char c : s) {
        if (c == '+') e.push_back(1);
        else if (c == '-') e.push_back(-1);
        else if (c != '(' && c != ')' && c != ' ')
            throw std::invalid_argument("eps_parse: bad character in " + s);
    }
    if (e.empty()) throw std::invalid_argument("eps_parse: empty sign vector");
    return e;
}

std::vector<Eps> all_eps(int n) {
    std::vector<Eps> out;
    out.reserve(1u << n);
    for (int mask = 0; mask < (1 << n); ++mask) {
        Eps e(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(std::move(e));
    }
    return out;
}

int minus_count(const Eps& e) {
    return static_cast<int>(std::count(e.begin(), e.end(), -1));
}

bool in_parity_class(const Eps& e, int varsigma) {
    return minus_count(e) % 2 == varsigma % 2;
}

namespace {

LMonomial tau_y(LMonomial m) {
    for (auto& f : m.y) f.node += 1;
    return m;
}

void check_signs(const Eps& e) {
    for (int v : e)
        if (v != 1 && v != -1) throw std::invalid_argument("spin: sign entries must be +-1");
}

LMonomial spin_monomial_rec(LieType t, const Eps& e) {
    const int m = static_cast<int>(e.size());
    if (t == LieType::C) {
        if (m == 1) return e[0] == 1 ? lm_y(1, 0) : lm_y(1, 4, -1);
        LMonomial sub = tau_y(spin_monomial_rec(t, Eps(e.begin() + 1, e.end())));
        if (e[0] == 1) return e[1] == -1 ? lm_mul(lm_y(1, m), sub) : sub;
        sub = lm_shift_z(sub, 2);
        return e[1] == 1 ? lm_mul(lm_y(1, m + 2, -1), sub) : sub;
    }
    if (t == LieType::D) {
        if (m == 2) {
            if (e[0] == 1) return e[1] == 1 ? lm_y(2, 0) : lm_y(1, 0);
            return e[1] == 1 ? lm_y(1, 4, -1) : lm_y(2, 4, -1);
        }
        LMonomial sub = tau_y(spin_monomial_rec(t, Eps(e.begin() + 1, e.end())));
        if (e[0] == 1) return e[1] == -1 ? lm_mul(lm_y(1, 2 * (m - 2)), sub) : sub;
        sub = lm_shift_z(sub, 4);
        return e[1] == 1 ? lm_mul(lm_y(1, 2 * m, -1), sub) : sub;
    }
    throw std::invalid_argument("spin_monomial: spin nodes exist for types C and D only");
}

}  // namespace

LMonomial spin_monomial(LieType t, const Eps& e, int dBase) {
    check_signs(e);
    if (e.empty() || (t == LieType::D && e.size() < 2))
        throw std::invalid_argument("spin_monomial: sign vector too short");
    return lm_shift_z(spin_monomial_rec(t, e), dBase);
}

bool has_spin_provider(const AlgebraContext& ctx) {
    return (ctx.type() == LieType::C && ctx.rank() == 2) ||
           (ctx.type() == LieType::D && ctx.rank() == 4);
}

namespace {

// Sign vectors corresponding to the boxes 1..4 under the relabelings that
// swap node 1 with a spin node of D4; barred boxes carry the negated vector.
constexpr int kSwap13Box[4][4] = {
    {1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}};
constexpr int kSwap14Box[4][4] = {
    {1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};

BoxIndex find_box(const int table[4][4], const Eps& e) {
    for (int b = 0; b < 4; ++b) {
        bool plain = true, barred = true;
        for (int i = 0; i < 4; ++i) {
            plain = plain && e[static_cast<size_t>(i)] == table[b][i];
            barred = barred && e[static_cast<size_t>(i)] == -table[b][i];
        }
        if (plain) return b + 1;
        if (barred) return -(b + 1);
    }
    throw std::logic_error("spin_series: sign vector not matched to a box");
}

}  // namespace

GradedSeries spin_series(const AlgebraContext& ctx, const Eps& e, int relD,
                         int dBase) {
    check_signs(e);
    if (!has_spin_provider(ctx))
        throw std::invalid_argument("spin_series: no provider for " + ctx.name());
    if (static_cast<int>(e.size()) != ctx.rank())
        throw std::invalid_argument("spin_series: sign vector length != rank");

    if (ctx.type() == LieType::C) {
        // R^(2) of C2 is the basic B2 series under the node relabeling 1<->2.
        static const NodeTransport t =
            make_transport(context(LieType::B, 2), context(LieType::C, 2), {2, 1});
        BoxIndex b;
        if (e[0] == 1) b = e[1] == 1 ? 1 : 2;
        else b = e[1] == 1 ? -2 : -1;
        return transport(t, build_q1(context(LieType::B, 2), b, relD, dBase));
    }

    // D4: parity class selects the spin node; the series is the basic series
    // of the relabeled algebra.
    const auto& d4 = context(LieType::D, 4);
    if (minus_count(e) % 2 == 1) {
        static const NodeTransport t13 = make_transport(d4, d4, {3, 2, 1, 4});
        return transport(t13, build_q1(d4, find_box(kSwap13Box, e), relD, dBase));
    }
    static const NodeTransport t14 = make_transport(d4, d4, {4, 2, 3, 1});
    return transport(t14, build_q1(d4, find_box(kSwap14Box, e), relD, dBase));
}

namespace {

XSeries two_term(const AlgebraContext& ctx, const XWeight& w) {
    XSeries f = XSeries::zero(ctx);
    f.accumulate(XWeight{}, Int(1));
    f.accumulate(w, Int(-1));
    return f;
}

void split_positions(const Eps& e, std::vector<int>& phi, std::vector<int>& psi) {
    for (int i = 0; i < static_cast<int>(e.size()); ++i)
        (e[static_cast<size_t>(i)] == 1 ? phi : psi).push_back(i + 1);
}

}  // namespace

XSeries spin_normalizer(const AlgebraContext& ctx, const Eps& e) {
    if (ctx.type() != LieType::C && ctx.type() != LieType::D)
        throw std::invalid_argument("spin_normalizer: types C and D only");
    check_signs(e);
    std::vector<int> phi, psi;
    split_positions(e, phi, psi);
    XSeries acc = XSeries::monomial(ctx, XWeight{});
    const size_t lo = ctx.type() == LieType::C ? 0 : 1;  // k <= l vs k < l
    for (size_t k = 0; k < psi.size(); ++k)
        for (size_t l = k + lo; l < psi.size(); ++l)
            acc = acc * two_term(ctx, x_mul(x_var_pow(psi[k], Rational(1)),
                                            x_var_pow(psi[l], Rational(1))));
    for (int p : phi)
        for (int q : psi)
            if (p > q)
                acc = acc * two_term(ctx, x_mul(x_var_pow(p, Rational(-1)),
                                                x_var_pow(q, Rational(1))));
    return acc;
}

XSeries spin_char_denominator(const AlgebraContext& ctx, const Eps& e) {
    if (ctx.type() != LieType::C && ctx.type() != LieType::D)
        throw std::invalid_argument("spin_char_denominator: types C and D only");
    check_signs(e);
    const int n = static_cast<int>(e.size());
    XSeries acc = XSeries::monomial(ctx, XWeight{});
    if (ctx.type() == LieType::C)
        for (int i = 1; i <= n; ++i)
            acc = acc * two_term(ctx, x_var_pow(i, Rational(-2 * e[static_cast<size_t>(i - 1)])));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            acc = acc * two_term(
                            ctx, x_mul(x_var_pow(i, Rational(-e[static_cast<size_t>(i - 1)])),
                                       x_var_pow(j, Rational(-e[static_cast<size_t>(j - 1)]))));
    return acc;
}

}  // namespace qcr
