#include "qcharrel/determinant.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace qcr {

namespace {

void require_square(const SeriesMatrix& m) {
    if (m.empty()) throw std::invalid_argument("det: empty matrix");
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("det: not square");
}

int inversion_parity(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

GradedSeries det_leibniz(const SeriesMatrix& m) {
    require_square(m);
    const size_t a = m.size();
    const AlgebraContext& ctx = m[0][0].ctx();

    std::vector<int> perm(a);
    std::iota(perm.begin(), perm.end(), 0);
    GradedSeries acc = GradedSeries::zero(ctx);
    bool first = true;
    do {
        GradedSeries term = m[0][perm[0]];
        for (size_t r = 1; r < a; ++r) term = term * m[r][perm[r]];
        if (inversion_parity(perm) < 0) term = neg(term);
        acc = first ? term : acc + term;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

GradedSeries det_cofactor(const SeriesMatrix& m) {
    require_square(m);
    const size_t a = m.size();
    if (a > 31) throw std::invalid_argument("det: matrix too large");
    const AlgebraContext& ctx = m[0][0].ctx();

    // minor(mask) = det of the bottom popcount(mask) rows on the columns in
    // mask; expanding each level along its top row shares all sub-minors.
    std::unordered_map<uint32_t, GradedSeries> memo;
    auto minor = [&](auto&& self, uint32_t mask) -> GradedSeries {
        if (mask == 0) return GradedSeries::monomial(ctx, lm_one());
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const int k = __builtin_popcount(mask);
        const size_t r = a - static_cast<size_t>(k);
        GradedSeries acc = GradedSeries::zero(ctx);
        bool first = true;
        int pos = 0;
        for (size_t c = 0; c < a; ++c) {
            if (!(mask & (1u << c))) continue;
            GradedSeries term = m[r][c] * self(self, mask & ~(1u << c));
            if (pos % 2 == 1) term = neg(term);
            acc = first ? term : acc + term;
            first = false;
            ++pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return minor(minor, (a == 31 ? 0x7fffffffu : ((1u << a) - 1u)));
}

GradedSeries det_series(const SeriesMatrix& m) {
    require_square(m);
    return m.size() <= 3 ? det_leibniz(m) : det_cofactor(m);
}

Rational assignment_min(const std::vector<std::vector<Rational>>& cost) {
    const size_t a = cost.size();
    if (a == 0) return Rational(0);
    if (a > 9) throw std::invalid_argument("assignment_min: too large for brute force");
    std::vector<int> perm(a);
    std::iota(perm.begin(), perm.end(), 0);
    bool first = true;
    Rational best(0);
    do {
        Rational s(0);
        for (size_t r = 0; r < a; ++r) s += cost[r][perm[r]];
        if (first || s < best) best = s;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

int entry_depth(const Rational& coverTo, const Rational& sMin) {
    Rational need = coverTo - sMin;
    if (need.num <= 0) return 0;
    // ceil for positive rationals (den > 0 by normalization)
    return static_cast<int>((need.num + need.den - 1) / need.den);
}

namespace {

/// Minimal total scalar height of the column powers x_{j_nu}^(mu-1) over row
/// assignments. The per-column heights are paired against the descending
/// power sequence, which realizes the minimum (rearrangement inequality).
Rational casorati_smin(const AlgebraContext& ctx, const std::vector<BoxIndex>& J) {
    const int a = static_cast<int>(J.size());
    std::vector<Rational> h;
    h.reserve(J.size());
    for (BoxIndex j : J) h.push_back(abs_height(ctx, x_of_box(ctx, j)));
    std::sort(h.begin(), h.end());
    Rational s(0);
    for (int k = 0; k < a; ++k) s += h[static_cast<size_t>(k)] * Rational(a - 1 - k);
    return s;
}

}  // namespace

GradedSeries casorati(const AlgebraContext& ctx, const std::vector<BoxIndex>& J,
                      const Rational& coverTo, int dBase) {
    const int a = static_cast<int>(J.size());
    if (a == 0) return GradedSeries::monomial(ctx, lm_one());
    for (BoxIndex j : J)
        if (!ctx.valid_index(j)) throw std::invalid_argument("casorati: bad index " + box_str(j));
    {
        std::vector<BoxIndex> s = J;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            return GradedSeries::zero(ctx);  // repeated column: identically zero
    }

    int depth = entry_depth(coverTo, casorati_smin(ctx, J));
    for (int attempt = 0; attempt < 8; ++attempt) {
        SeriesMatrix e(static_cast<size_t>(a));
        for (int mu = 1; mu <= a; ++mu) {
            auto& row = e[static_cast<size_t>(mu - 1)];
            row.reserve(J.size());
            const int d = dBase + ctx.dd1() * (2 * mu - a - 1);
            for (BoxIndex j : J)
                row.push_back(scale(build_q1(ctx, j, depth, d),
                                    lm_x(x_of_box(ctx, j, Rational(mu - 1)))));
        }
        GradedSeries det = det_series(e);
        if (det.valid().covers(coverTo)) return det;
        depth += entry_depth(coverTo, det.valid().v) + 1;
    }
    throw std::logic_error("casorati: depth iteration failed to converge");
}

namespace {

void require_type_a_box(const AlgebraContext& ctx, int i) {
    if (ctx.type() != LieType::A)
        throw std::invalid_argument("alternative representation is type A only");
    if (i < 1 || i > ctx.rank() + 1)
        throw std::invalid_argument("alt rep: box out of range");
}

}  // namespace

GradedSeries delta_closed(const AlgebraContext& ctx, int i, int a, int relD,
                          int dBase) {
    require_type_a_box(ctx, i);
    const int n = ctx.rank();
    if (a < 0) throw std::invalid_argument("delta: negative level");
    if (a > n + 1 - i) return GradedSeries::zero(ctx);
    if (a == n + 1 - i) return GradedSeries::monomial(ctx, lm_one());

    // Coordinates k_{i+1}..k_{n+1-a}; coordinate index c holds k_{i+1+c} and
    // contributes height (c+1) per unit.
    const int m = n + 1 - a - i;
    std::vector<long long> k(static_cast<size_t>(m), 0);
    GradedSeries acc = GradedSeries::zero(ctx, Height::of(Rational(relD)));

    XWeight xi_inv = x_of_box(ctx, i, Rational(-1));
    auto height_of = [&]() {
        long long h = 0;
        for (int c = 0; c < m; ++c) h += k[static_cast<size_t>(c)] * (c + 1);
        return h;
    };
    auto emit = [&]() {
        LMonomial t = lm_one();
        for (int j = i; j <= n - a; ++j) {
            const int c = j - i;  // k_{j+1} lives at coordinate c
            long long suffix = 0;
            for (int u = c; u < m; ++u) suffix += k[static_cast<size_t>(u)];
            if (k[static_cast<size_t>(c)] != 0) {
                XWeight ratio = x_mul(x_of_box(ctx, j + 1), xi_inv);
                t = lm_mul(t, lm_x(x_pow(ratio, Rational(k[static_cast<size_t>(c)]))));
            }
            t = lm_mul(t, alt_a_inv(ctx, j, dBase + 2 * j - 4 * static_cast<int>(suffix)));
        }
        assert(lm_height(ctx, t) == Rational(height_of()));
        acc.accumulate(t, Int(1));
    };
    // depth-first walk over the cone height <= relD
    int c = 0;
    emit();
    if (m == 0) return acc;
    while (c >= 0) {
        k[static_cast<size_t>(c)] += 1;
        if (height_of() <= relD) {
            emit();
            c = 0;
        } else {
            k[static_cast<size_t>(c)] = 0;
            ++c;
            if (c >= m) break;
        }
    }
    return acc;
}

GradedSeries q1_alt(const AlgebraContext& ctx, int i, int relD, int dBase) {
    require_type_a_box(ctx, i);
    const int n = ctx.rank();
    return scale(delta_closed(ctx, i, 0, relD, dBase),
                 lm_y(n, dBase + 2 * (n + 1), -1));
}

GradedSeries delta_series(const AlgebraContext& ctx, int i, int a, int relD,
                          int dBase) {
    require_type_a_box(ctx, i);
    const int n = ctx.rank();
    if (a < 0) throw std::invalid_argument("delta: negative level");
    if (a == 0)
        return scale(build_q1(ctx, i, relD, dBase), lm_y(n, dBase + 2 * (n + 1)));
    if (a > n) throw std::invalid_argument("delta recursion: level out of range");

    GradedSeries prev = delta_series(ctx, i, a - 1, relD, dBase);
    XWeight ratio = x_mul(x_of_box(ctx, n + 2 - a), x_of_box(ctx, i, Rational(-1)));
    GradedSeries diff = prev - scale(shift_z(prev, -4), lm_x(ratio));
    return scale(diff, lm_inv(alt_a_inv(ctx, n + 1 - a, dBase + 2 * (n + 1 - a))));
}

GradedSeries newrep_det(const AlgebraContext& ctx, const std::vector<BoxIndex>& J,
                        const Rational& coverTo, int dBase) {
    if (ctx.type() != LieType::A)
        throw std::invalid_argument("newrep_det is type A only");
    const int n = ctx.rank();
    const int a = static_cast<int>(J.size());
    if (a < 1 || a > n + 1) throw std::invalid_argument("newrep_det: bad tuple size");
    for (BoxIndex j : J) require_type_a_box(ctx, j);

    int depth = entry_depth(coverTo, casorati_smin(ctx, J));
    for (int attempt = 0; attempt < 8; ++attempt) {
        SeriesMatrix e(static_cast<size_t>(a));
        for (int mu = 1; mu <= a; ++mu) {
            auto& row = e[static_cast<size_t>(mu - 1)];
            row.reserve(J.size());
            const int d = dBase + 2 * (2 * mu - 1 - a);
            for (BoxIndex j : J)
                row.push_back(scale(delta_closed(ctx, j, mu - 1, depth, d),
                                    lm_x(x_of_box(ctx, j, Rational(mu - 1)))));
        }
        GradedSeries det = det_series(e);
        if (n + 1 - a >= 1)
            det = scale(det, lm_y(n + 1 - a, dBase + 2 * (n + 1), -1));
        if (det.valid().covers(coverTo)) return det;
        depth += entry_depth(coverTo, det.valid().v) + 1;
    }
    throw std::logic_error("newrep_det: depth iteration failed to converge");
}

}  // namespace qcr
