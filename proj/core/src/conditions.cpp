#include "qcharrel/conditions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qcr {

TupleSplit split_tuple(const AlgebraContext& ctx, const std::vector<BoxIndex>& J) {
    if (!ctx.is_increasing(J)) throw std::invalid_argument("split_tuple: tuple not increasing");
    std::set<BoxIndex> in(J.begin(), J.end());
    TupleSplit out;
    out.hasZero = in.count(0) > 0;
    for (int i = 1; i <= ctx.rank(); ++i) {
        const bool plain = in.count(i) > 0;
        const bool barred = in.count(-i) > 0;
        if (plain && barred) out.sigma.push_back(i);
        else if (plain) out.alpha.push_back(i);
        else if (barred) out.beta.push_back(i);
        else out.eta.push_back(i);
    }
    return out;
}

namespace {

/// Enumerate the pairs for a given split: agreement entries are forced,
/// sigma positions go to gamma, and each eta position picks a side; keep
/// returns whether a candidate delta size t is admissible.
template <typename Keep>
std::vector<SpinPair> enumerate_pairs(const AlgebraContext& ctx, const TupleSplit& sp,
                                      Keep keep) {
    const int n = ctx.rank();
    const int v = sp.v();
    std::vector<SpinPair> out;
    for (int mask = 0; mask < (1 << v); ++mask) {
        SpinPair p;
        p.eps1.assign(static_cast<size_t>(n), 1);
        p.eps2.assign(static_cast<size_t>(n), 1);
        for (int b : sp.beta) {
            p.eps1[static_cast<size_t>(b - 1)] = -1;
            p.eps2[static_cast<size_t>(b - 1)] = -1;
        }
        for (int s : sp.sigma) {
            p.eps2[static_cast<size_t>(s - 1)] = -1;  // sigma in gamma: (+,-)
            p.gamma.push_back(s);
        }
        for (int k = 0; k < v; ++k) {
            const int pos = sp.eta[static_cast<size_t>(k)];
            if ((mask >> k) & 1) {
                p.eps1[static_cast<size_t>(pos - 1)] = -1;  // delta: (-,+)
                p.delta.push_back(pos);
            } else {
                p.eps2[static_cast<size_t>(pos - 1)] = -1;  // gamma: (+,-)
                p.gamma.push_back(pos);
            }
        }
        if (!keep(p)) continue;
        std::sort(p.gamma.begin(), p.gamma.end());
        std::sort(p.delta.begin(), p.delta.end());
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::vector<SpinPair> condition_pairs_C(const AlgebraContext& ctx,
                                        const std::vector<BoxIndex>& J) {
    if (ctx.type() != LieType::C)
        throw std::invalid_argument("condition_pairs_C: type C only");
    return enumerate_pairs(ctx, split_tuple(ctx, J), [](const SpinPair&) { return true; });
}

std::vector<SpinPair> condition_pairs_D1(const AlgebraContext& ctx,
                                         const std::vector<BoxIndex>& J,
                                         int varsigma) {
    if (ctx.type() != LieType::D)
        throw std::invalid_argument("condition_pairs_D1: type D only");
    TupleSplit sp = split_tuple(ctx, J);
    if ((sp.v() - sp.u()) % 2 != 0)
        throw std::invalid_argument("condition_pairs_D1: needs v - u even");
    const int r = sp.r();
    auto pairs = enumerate_pairs(ctx, sp, [&](const SpinPair& p) {
        return (p.t() - r - varsigma) % 2 == 0;
    });
    // The parity filter is equivalent to class membership; keep that fact checked.
    for (const auto& p : pairs)
        if (!in_parity_class(p.eps1, varsigma) || !in_parity_class(p.eps2, varsigma))
            throw std::logic_error("condition_pairs_D1: parity filter mismatch");
    return pairs;
}

std::vector<SpinPair> condition_pairs_D2(const AlgebraContext& ctx,
                                         const std::vector<BoxIndex>& J) {
    if (ctx.type() != LieType::D)
        throw std::invalid_argument("condition_pairs_D2: type D only");
    TupleSplit sp = split_tuple(ctx, J);
    if ((sp.v() - sp.u()) % 2 == 0)
        throw std::invalid_argument("condition_pairs_D2: needs v - u odd");
    return enumerate_pairs(ctx, sp, [&](const SpinPair& p) {
        return minus_count(p.eps1) % 2 == 1;  // eps in the odd, eps' in the even class
    });
}

}  // namespace qcr
