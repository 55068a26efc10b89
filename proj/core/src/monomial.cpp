#include "qcharrel/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcr {

Rational XWeight::exponent(int var) const {
    for (const auto& [v, ex] : e)
        if (v == var) return ex;
    return Rational(0);
}

bool operator<(const XWeight& a, const XWeight& b) {
    size_t n = std::min(a.e.size(), b.e.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.e[i].first != b.e[i].first) return a.e[i].first < b.e[i].first;
        if (a.e[i].second != b.e[i].second) return a.e[i].second < b.e[i].second;
    }
    return a.e.size() < b.e.size();
}

std::string XWeight::str() const {
    if (e.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) out += " ";
        out += "x" + std::to_string(e[i].first);
        if (e[i].second != Rational(1)) out += "^" + e[i].second.str();
    }
    return out;
}

XWeight x_mul(const XWeight& a, const XWeight& b) {
    XWeight r;
    size_t i = 0, k = 0;
    while (i < a.e.size() || k < b.e.size()) {
        if (k == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[k].first)) {
            r.e.push_back(a.e[i++]);
        } else if (i == a.e.size() || b.e[k].first < a.e[i].first) {
            r.e.push_back(b.e[k++]);
        } else {
            Rational s = a.e[i].second + b.e[k].second;
            if (!s.is_zero()) r.e.emplace_back(a.e[i].first, s);
            ++i; ++k;
        }
    }
    return r;
}

XWeight x_inv(const XWeight& a) {
    XWeight r = a;
    for (auto& [v, ex] : r.e) ex = -ex;
    return r;
}

XWeight x_pow(const XWeight& a, const Rational& k) {
    if (k.is_zero()) return XWeight{};
    XWeight r = a;
    for (auto& [v, ex] : r.e) ex *= k;
    return r;
}

XWeight x_var_pow(int var, Rational exp) {
    XWeight r;
    if (!exp.is_zero()) r.e.emplace_back(var, exp);
    return r;
}

XWeight x_normalized(const AlgebraContext& ctx, XWeight w) {
    if (ctx.type() != LieType::A) return w;
    Rational total(0);
    for (const auto& [v, ex] : w.e) total += ex;
    if (total.is_zero()) return w;
    Rational shift = total / Rational(ctx.num_x());
    XWeight r;
    int next = 1;
    auto push_missing_until = [&](int var) {
        for (; next < var; ++next) r.e.emplace_back(next, -shift);
    };
    for (const auto& [v, ex] : w.e) {
        push_missing_until(v);
        Rational adj = ex - shift;
        if (!adj.is_zero()) r.e.emplace_back(v, adj);
        next = v + 1;
    }
    push_missing_until(ctx.num_x() + 1);
    return r;
}

XWeight x_of_box(const AlgebraContext& ctx, BoxIndex j, Rational exp) {
    if (!ctx.valid_index(j)) throw std::out_of_range("x_of_box: bad index " + box_str(j));
    if (j == 0 || exp.is_zero()) return XWeight{};
    XWeight w = x_var_pow(j > 0 ? j : -j, j > 0 ? exp : -exp);
    return x_normalized(ctx, w);
}

XWeight x_of_tuple(const AlgebraContext& ctx, const std::vector<BoxIndex>& J, Rational exp) {
    XWeight w;
    for (BoxIndex j : J) w = x_mul(w, x_of_box(ctx, j, exp));
    return w;
}

XWeight e_omega(const AlgebraContext& ctx, int i) {
    int n = ctx.rank();
    if (i < 1 || i > n) throw std::out_of_range("e_omega: node out of range");
    XWeight w;
    switch (ctx.type()) {
        case LieType::A: {
            // normalized form of x_1...x_i
            Rational hi = Rational(n + 1 - i, n + 1), lo = Rational(-i, n + 1);
            for (int v = 1; v <= n + 1; ++v) w.e.emplace_back(v, v <= i ? hi : lo);
            break;
        }
        case LieType::B: {
            Rational ex = i < n ? Rational(1) : Rational(1, 2);
            int top = i < n ? i : n;
            for (int v = 1; v <= top; ++v) w.e.emplace_back(v, ex);
            break;
        }
        case LieType::C:
            for (int v = 1; v <= i; ++v) w.e.emplace_back(v, Rational(1));
            break;
        case LieType::D: {
            if (i <= n - 2) {
                for (int v = 1; v <= i; ++v) w.e.emplace_back(v, Rational(1));
            } else {
                for (int v = 1; v <= n; ++v)
                    w.e.emplace_back(v, (v == n && i == n - 1) ? Rational(-1, 2)
                                                               : Rational(1, 2));
            }
            break;
        }
    }
    return w;
}

XWeight e_alpha(const AlgebraContext& ctx, int i) {
    int n = ctx.rank();
    if (i < 1 || i > n) throw std::out_of_range("e_alpha: node out of range");
    XWeight w;
    switch (ctx.type()) {
        case LieType::A:
            w.e.emplace_back(i, Rational(1));
            w.e.emplace_back(i + 1, Rational(-1));
            break;
        case LieType::B:
            if (i < n) { w.e.emplace_back(i, Rational(1)); w.e.emplace_back(i + 1, Rational(-1)); }
            else w.e.emplace_back(n, Rational(1));
            break;
        case LieType::C:
            if (i < n) { w.e.emplace_back(i, Rational(1)); w.e.emplace_back(i + 1, Rational(-1)); }
            else w.e.emplace_back(n, Rational(2));
            break;
        case LieType::D:
            if (i < n) { w.e.emplace_back(i, Rational(1)); w.e.emplace_back(i + 1, Rational(-1)); }
            else { w.e.emplace_back(n - 1, Rational(1)); w.e.emplace_back(n, Rational(1)); }
            break;
    }
    return w;
}

Rational abs_height(const AlgebraContext& ctx, const XWeight& w) {
    Rational h(0);
    for (const auto& [v, ex] : w.e) h -= ctx.grading_weight(v) * ex;
    return h;
}

SignedX sx_mul(const SignedX& a, const SignedX& b) {
    return SignedX{a.sign * b.sign, x_mul(a.w, b.w)};
}

SignedX big_x(const AlgebraContext& ctx, const std::vector<BoxIndex>& J) {
    SignedX r;
    for (size_t p = 0; p < J.size(); ++p)
        for (size_t s = 0; s < J.size(); ++s) {
            if (p == s || !ctx.less(J[p], J[s])) continue;
            Rational exp = J[s] == bar(J[p]) ? Rational(-1, 2) : Rational(-1);
            r.sign = -r.sign;
            r.w = x_mul(r.w, x_of_box(ctx, J[p], exp));
        }
    return r;
}

SignedX x_rel(const AlgebraContext& ctx, BoxIndex i, const std::vector<BoxIndex>& J) {
    SignedX r;
    for (BoxIndex j : J) {
        if (!ctx.less(i, j)) continue;
        Rational exp = j == bar(i) ? Rational(1, 2) : Rational(1);
        r.sign = -r.sign;
        r.w = x_mul(r.w, x_of_box(ctx, i, exp));
    }
    for (BoxIndex j : ctx.complement(J)) {
        if (!ctx.less(j, i)) continue;
        Rational exp = i == bar(j) ? Rational(-1, 2) : Rational(-1);
        r.w = x_mul(r.w, x_of_box(ctx, j, exp));
    }
    return r;
}

bool operator<(const LMonomial& a, const LMonomial& b) {
    size_t n = std::min(a.y.size(), b.y.size());
    for (size_t i = 0; i < n; ++i) {
        if (!(a.y[i] == b.y[i])) return a.y[i] < b.y[i];
    }
    if (a.y.size() != b.y.size()) return a.y.size() < b.y.size();
    return a.x < b.x;
}

std::string LMonomial::str() const {
    std::string out;
    for (const auto& f : y) {
        if (!out.empty()) out += " ";
        out += "Y[" + std::to_string(f.node) + "," + Rational(f.d, 2).str() + "]";
        if (f.exp != 1) out += "^" + std::to_string(f.exp);
    }
    if (!x.is_trivial()) {
        if (!out.empty()) out += " ";
        out += x.str();
    }
    return out.empty() ? "1" : out;
}

LMonomial lm_one() { return LMonomial{}; }

LMonomial lm_y(int node, int d, int exp) {
    LMonomial m;
    if (exp != 0) m.y.push_back(YFactor{node, d, exp});
    return m;
}

LMonomial lm_x(const XWeight& w) { return LMonomial{{}, w}; }

LMonomial lm_mul(const LMonomial& a, const LMonomial& b) {
    LMonomial r;
    size_t i = 0, k = 0;
    auto key_less = [](const YFactor& p, const YFactor& q) {
        return p.node != q.node ? p.node < q.node : p.d < q.d;
    };
    while (i < a.y.size() || k < b.y.size()) {
        if (k == b.y.size() || (i < a.y.size() && key_less(a.y[i], b.y[k]))) {
            r.y.push_back(a.y[i++]);
        } else if (i == a.y.size() || key_less(b.y[k], a.y[i])) {
            r.y.push_back(b.y[k++]);
        } else {
            int ex = a.y[i].exp + b.y[k].exp;
            if (ex != 0) r.y.push_back(YFactor{a.y[i].node, a.y[i].d, ex});
            ++i; ++k;
        }
    }
    r.x = x_mul(a.x, b.x);
    return r;
}

LMonomial lm_inv(const LMonomial& a) {
    LMonomial r = a;
    for (auto& f : r.y) f.exp = -f.exp;
    r.x = x_inv(a.x);
    return r;
}

LMonomial lm_shift_z(const LMonomial& a, int dDelta) {
    LMonomial r = a;
    for (auto& f : r.y) f.d += dDelta;
    return r;
}

}  // namespace qcr
