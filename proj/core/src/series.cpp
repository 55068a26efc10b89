#include "qcharrel/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcr {

GradedSeries GradedSeries::zero(const AlgebraContext& ctx, Height valid) {
    return GradedSeries(&ctx, valid);
}

GradedSeries GradedSeries::monomial(const AlgebraContext& ctx, const LMonomial& m,
                                    Int coeff, Height valid) {
    GradedSeries s(&ctx, valid);
    s.accumulate(m, coeff);
    return s;
}

std::optional<Rational> GradedSeries::min_height() const {
    std::optional<Rational> best;
    for (const auto& [m, c] : terms_) {
        Rational h = lm_height(*ctx_, m);
        if (!best || h < *best) best = h;
    }
    return best;
}

Rational GradedSeries::eff_min() const {
    auto mh = min_height();
    if (mh) return *mh;
    if (valid_.inf)
        throw std::logic_error("eff_min of exact zero series is unbounded");
    return valid_.v;
}

Int GradedSeries::coeff(const LMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void GradedSeries::accumulate(const LMonomial& m, const Int& c) {
    if (c == 0) return;
    if (!valid_.covers(lm_height(*ctx_, m))) return;  // beyond the exact region
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedSeries GradedSeries::truncated(Height newValid) const {
    GradedSeries r(ctx_, min(valid_, newValid));
    for (const auto& [m, c] : terms_) r.accumulate(m, c);
    return r;
}

bool GradedSeries::is_zero_through(const Rational& h) const {
    if (!valid_.covers(h))
        throw std::logic_error("is_zero_through: series not valid that far");
    for (const auto& [m, c] : terms_)
        if (lm_height(*ctx_, m) <= h) return false;
    return true;
}

std::optional<std::pair<LMonomial, Int>> GradedSeries::first_term_through(
    const Rational& h) const {
    std::optional<std::pair<LMonomial, Int>> best;
    std::optional<Rational> bestH;
    for (const auto& [m, c] : terms_) {
        Rational hm = lm_height(*ctx_, m);
        if (hm > h) continue;
        if (!best || hm < *bestH || (hm == *bestH && m < best->first)) {
            best = {m, c};
            bestH = hm;
        }
    }
    return best;
}

std::string GradedSeries::serialize(const std::string& label) const {
    // Canonical text: header then terms sorted by (height, monomial order).
    std::vector<std::pair<Rational, const std::pair<const LMonomial, Int>*>> rows;
    rows.reserve(terms_.size());
    for (const auto& kv : terms_) rows.push_back({lm_height(*ctx_, kv.first), &kv});
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) {
                         if (!(a.first == b.first)) return a.first < b.first;
                         return a.second->first < b.second->first;
                     });
    std::ostringstream out;
    out << "qseries v1 label=" << label << " ctx=" << ctx_->name()
        << " terms=" << terms_.size() << " valid=" << valid_.str() << "\n";
    for (const auto& [h, kv] : rows)
        out << h.str() << " | " << kv->second.str() << " | " << kv->first.str() << "\n";
    return out.str();
}

namespace {
void require_same_ctx(const GradedSeries& a, const GradedSeries& b) {
    if (&a.ctx() != &b.ctx())
        throw std::logic_error("series from different algebra contexts");
}
}  // namespace

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
    require_same_ctx(a, b);
    GradedSeries r(&a.ctx(), min(a.valid(), b.valid()));
    for (const auto& [m, c] : a.terms()) r.accumulate(m, c);
    for (const auto& [m, c] : b.terms()) r.accumulate(m, c);
    return r;
}

GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
    require_same_ctx(a, b);
    GradedSeries r(&a.ctx(), min(a.valid(), b.valid()));
    for (const auto& [m, c] : a.terms()) r.accumulate(m, c);
    for (const auto& [m, c] : b.terms()) r.accumulate(m, -c);
    return r;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    require_same_ctx(a, b);
    if ((a.empty() && a.valid().inf) || (b.empty() && b.valid().inf))
        return GradedSeries(&a.ctx(), Height::infinite());  // exact zero factor
    // Exactness region of the stored convolution: a term at height h <= bound
    // requires both factor heights within the stored/valid windows.
    Height bound = min(a.valid() + b.eff_min(), b.valid() + a.eff_min());
    GradedSeries r(&a.ctx(), bound);
    if (a.terms().empty() || b.terms().empty()) return r;
    std::vector<std::pair<Rational, const std::pair<const LMonomial, Int>*>> bs;
    bs.reserve(b.terms().size());
    for (const auto& kv : b.terms()) bs.push_back({lm_height(b.ctx(), kv.first), &kv});
    for (const auto& [ma, ca] : a.terms()) {
        Rational ha = lm_height(a.ctx(), ma);
        for (const auto& [hb, kv] : bs) {
            if (!bound.covers(ha + hb)) continue;
            r.accumulate(lm_mul(ma, kv->first), ca * kv->second);
        }
    }
    return r;
}

GradedSeries scale(const GradedSeries& s, const LMonomial& m, const Int& c) {
    GradedSeries r(&s.ctx(), s.valid() + lm_height(s.ctx(), m));
    if (c == 0) return GradedSeries(&s.ctx(), Height::infinite());
    for (const auto& [t, ct] : s.terms()) r.accumulate(lm_mul(t, m), ct * c);
    return r;
}

GradedSeries shift_z(const GradedSeries& s, int dDelta) {
    GradedSeries r(&s.ctx(), s.valid());
    for (const auto& [t, ct] : s.terms()) r.accumulate(lm_shift_z(t, dDelta), ct);
    return r;
}

GradedSeries neg(const GradedSeries& s) {
    GradedSeries r(&s.ctx(), s.valid());
    for (const auto& [t, ct] : s.terms()) r.accumulate(t, -ct);
    return r;
}

NodeTransport make_transport(const AlgebraContext& from, const AlgebraContext& to,
                             const std::vector<int>& nodePerm, int dOffset) {
    if (from.rank() != to.rank() || static_cast<int>(nodePerm.size()) != from.rank())
        throw std::invalid_argument("transport: rank mismatch");
    int nf = from.num_x(), nt = to.num_x();
    // Solve for M with M * e_omega_from(i) = e_omega_to(perm(i)) for all i;
    // fundamental weights span the x lattice over Q for B/C/D (numX == rank).
    if (nf != from.rank() || nt != to.rank())
        throw std::invalid_argument("transport: only full-x-rank contexts supported");
    auto dense = [](const XWeight& w, int n) {
        std::vector<Rational> v(n, Rational(0));
        for (const auto& [var, ex] : w.e) v[var - 1] = ex;
        return v;
    };
    int n = from.rank();
    // A = matrix whose columns are e_omega_from(i); B similarly for target.
    // Want M = B_perm * A^{-1}. Solve A^T X^T = ... do Gaussian elimination on
    // augmented [A | B_perm] column-wise: find M with M A = Bp, i.e. for each
    // basis column a_i, M a_i = bp_i.  Equivalent: M = Bp * A^{-1}.
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n)),
        Bp(n, std::vector<Rational>(n));
    for (int i = 1; i <= n; ++i) {
        auto av = dense(e_omega(from, i), n);
        auto bv = dense(e_omega(to, nodePerm[i - 1]), n);
        for (int r = 0; r < n; ++r) { A[r][i - 1] = av[r]; Bp[r][i - 1] = bv[r]; }
    }
    // Invert A by Gauss-Jordan.
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
    auto M = A;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!M[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::logic_error("transport: singular weight matrix");
        std::swap(M[piv], M[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = M[col][col];
        for (int c = 0; c < n; ++c) { M[col][c] /= d; inv[col][c] /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            Rational f = M[r][col];
            for (int c = 0; c < n; ++c) {
                M[r][c] -= f * M[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    std::vector<std::vector<Rational>> xmap(n, std::vector<Rational>(n, Rational(0)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            for (int k = 0; k < n; ++k) xmap[r][c] += Bp[r][k] * inv[k][c];
    return NodeTransport{&from, &to, nodePerm, dOffset, xmap};
}

XWeight transport_x(const NodeTransport& t, const XWeight& w) {
    int nf = t.from->num_x(), nt = t.to->num_x();
    std::vector<Rational> v(nf, Rational(0));
    for (const auto& [var, ex] : w.e) v[var - 1] = ex;
    XWeight out;
    for (int r = 0; r < nt; ++r) {
        Rational s(0);
        for (int c = 0; c < nf; ++c) s += t.xmap[r][c] * v[c];
        if (!s.is_zero()) out.e.emplace_back(r + 1, s);
    }
    return out;
}

GradedSeries transport(const NodeTransport& t, const GradedSeries& s) {
    GradedSeries r(t.to, s.valid());
    for (const auto& [m, c] : s.terms()) {
        LMonomial m2;
        m2.x = transport_x(t, m.x);
        for (const auto& f : m.y)
            m2 = lm_mul(m2, lm_y(t.nodePerm[f.node - 1], f.d + t.dOffset, f.exp));
        r.accumulate(m2, c);
    }
    return r;
}

XSeries XSeries::zero(const AlgebraContext& ctx, Height valid) {
    return XSeries(&ctx, valid);
}

XSeries XSeries::monomial(const AlgebraContext& ctx, const XWeight& w, Int coeff,
                          Height valid) {
    XSeries s(&ctx, valid);
    s.accumulate(w, coeff);
    return s;
}

Rational XSeries::eff_min() const {
    std::optional<Rational> best;
    for (const auto& [w, c] : terms_) {
        Rational h = abs_height(*ctx_, w);
        if (!best || h < *best) best = h;
    }
    if (best) return *best;
    if (valid_.inf) throw std::logic_error("eff_min of exact zero x-series");
    return valid_.v;
}

void XSeries::accumulate(const XWeight& w, const Int& c) {
    if (c == 0) return;
    if (!valid_.covers(abs_height(*ctx_, w))) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool XSeries::is_zero_through(const Rational& h) const {
    if (!valid_.covers(h))
        throw std::logic_error("is_zero_through: x-series not valid that far");
    for (const auto& [w, c] : terms_)
        if (abs_height(*ctx_, w) <= h) return false;
    return true;
}

std::optional<std::pair<XWeight, Int>> XSeries::first_term_through(const Rational& h) const {
    std::optional<std::pair<XWeight, Int>> best;
    std::optional<Rational> bestH;
    for (const auto& [w, c] : terms_) {
        Rational hw = abs_height(*ctx_, w);
        if (hw > h) continue;
        if (!best || hw < *bestH || (hw == *bestH && w < best->first)) {
            best = {w, c};
            bestH = hw;
        }
    }
    return best;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
    XSeries r(&a.ctx(), min(a.valid(), b.valid()));
    for (const auto& [w, c] : a.terms()) r.accumulate(w, c);
    for (const auto& [w, c] : b.terms()) r.accumulate(w, c);
    return r;
}

XSeries operator-(const XSeries& a, const XSeries& b) {
    XSeries r(&a.ctx(), min(a.valid(), b.valid()));
    for (const auto& [w, c] : a.terms()) r.accumulate(w, c);
    for (const auto& [w, c] : b.terms()) r.accumulate(w, -c);
    return r;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
    if ((a.terms().empty() && a.valid().inf) || (b.terms().empty() && b.valid().inf))
        return XSeries(&a.ctx(), Height::infinite());
    Height bound = min(a.valid() + b.eff_min(), b.valid() + a.eff_min());
    XSeries r(&a.ctx(), bound);
    for (const auto& [wa, ca] : a.terms()) {
        Rational ha = abs_height(a.ctx(), wa);
        for (const auto& [wb, cb] : b.terms()) {
            if (!bound.covers(ha + abs_height(b.ctx(), wb))) continue;
            r.accumulate(x_mul(wa, wb), ca * cb);
        }
    }
    return r;
}

XSeries varpi(const GradedSeries& s) {
    XSeries r(&s.ctx(), s.valid());
    for (const auto& [m, c] : s.terms()) r.accumulate(m.x, c);
    return r;
}

XSeries expand_geometric(const AlgebraContext& ctx, int sign, const XWeight& m,
                         Height valid) {
    if (valid.inf) throw std::invalid_argument("expand_geometric needs a finite bound");
    Rational h = abs_height(ctx, m);
    if (h.is_zero())
        throw std::domain_error("expand_geometric: zero-height ratio " + m.str());
    XSeries r(&ctx, valid);
    if (h > Rational(0)) {
        // 1/(1 - s m) = sum_k s^k m^k
        XWeight acc;
        Int c(1);
        for (Rational hk(0); hk <= valid.v; hk += h) {
            r.accumulate(acc, c);
            acc = x_mul(acc, m);
            if (sign < 0) c = -c;
        }
    } else {
        // 1/(1 - s m) = -s m^{-1} / (1 - s m^{-1}) = sum_{k>=1} -(s^k) m^{-k}
        XWeight mi = x_inv(m);
        XWeight acc = mi;
        Int c = sign < 0 ? Int(1) : Int(-1);
        for (Rational hk = -h; hk <= valid.v; hk += -h) {
            r.accumulate(acc, c);
            acc = x_mul(acc, mi);
            if (sign < 0) c = -c;
        }
    }
    return r;
}

}  // namespace qcr
