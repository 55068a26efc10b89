#include "qcharrel/builders.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qcr {

const AlgebraContext& context(LieType t, int rank) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<AlgebraContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(t), rank);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<AlgebraContext>(t, rank)).first;
  }
  return *it->second;
}

int cartan(const AlgebraContext& ctx, int i, int j) {
  const int n = ctx.rank();
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("cartan: node");
  if (i == j) return 2;
  switch (ctx.type()) {
    case LieType::A:
      return (std::abs(i - j) == 1) ? -1 : 0;
    case LieType::B:
      if (i == n && j == n - 1) return -2;
      return (std::abs(i - j) == 1) ? -1 : 0;
    case LieType::C:
      if (i == n - 1 && j == n) return -2;
      return (std::abs(i - j) == 1) ? -1 : 0;
    case LieType::D:
      if (i == n - 2 && j == n) return -1;
      if (i == n && j == n - 2) return -1;
      if (i == n || j == n) return 0;
      return (std::abs(i - j) == 1) ? -1 : 0;
  }
  throw std::logic_error("cartan: unreachable");
}

LMonomial gen_a_inv(const AlgebraContext& ctx, int node, int d) {
  const int n = ctx.rank();
  if (node < 1 || node > n) throw std::out_of_range("gen_a_inv: node");
  LMonomial m = lm_x(x_inv(e_alpha(ctx, node)));
  m = lm_mul(m, lm_y(node, d - 2 * ctx.dd(node)));
  m = lm_mul(m, lm_y(node, d + 2 * ctx.dd(node), -1));
  for (int j = 1; j <= n; ++j) {
    if (j == node) continue;
    const int c = cartan(ctx, j, node);
    if (c == -1) {
      m = lm_mul(m, lm_y(j, d + ctx.dd(j)));
      m = lm_mul(m, lm_y(j, d - ctx.dd(j), -1));
    } else if (c == -2) {
      m = lm_mul(m, lm_y(j, d + 2 * ctx.dd(j)));
      m = lm_mul(m, lm_y(j, d - 2 * ctx.dd(j), -1));
    }
  }
  return m;
}

LMonomial alt_a_inv(const AlgebraContext& ctx, int node, int d) {
  if (ctx.type() != LieType::A) {
    throw std::invalid_argument("alt_a_inv: defined for type A only");
  }
  const int n = ctx.rank();
  if (node < 1 || node > n) throw std::out_of_range("alt_a_inv: node");
  LMonomial m = lm_mul(lm_y(node, d - 2), lm_y(node, d + 2));
  if (node - 1 >= 1) m = lm_mul(m, lm_y(node - 1, d, -1));
  if (node + 1 <= n) m = lm_mul(m, lm_y(node + 1, d, -1));
  return m;
}

namespace {

LMonomial y_if(int node, int d, int exp, int lo, int hi) {
  if (node < lo || node > hi) return lm_one();
  return lm_y(node, d, exp);
}

}  // namespace

LMonomial phi(const AlgebraContext& ctx, BoxIndex b) {
  const int n = ctx.rank();
  if (!ctx.valid_index(b)) throw std::out_of_range("phi: box index");
  switch (ctx.type()) {
    case LieType::A: {
      const int i = b;  // 1..n+1
      LMonomial m = y_if(i - 1, 2 * i, -1, 1, n);
      return lm_mul(m, y_if(i, 2 * (i - 1), 1, 1, n));
    }
    case LieType::B: {
      if (b > 0) {
        const int i = b;
        LMonomial m = y_if(i - 1, 2 * i, -1, 1, n);
        return lm_mul(m, lm_y(i, 2 * (i - 1)));
      }
      const int i = -b;
      LMonomial m = y_if(i - 1, 2 * (2 * n - i - 1), 1, 1, n);
      return lm_mul(m, lm_y(i, 2 * (2 * n - i), -1));
    }
    case LieType::C: {
      if (b == 0) {
        throw std::invalid_argument("phi: C-type index 0 has two pieces; use q1_hat_prefix");
      }
      if (b > 0) {
        const int i = b;
        if (i <= n - 1) {
          LMonomial m = y_if(i - 1, i, -1, 1, n);
          return lm_mul(m, lm_y(i, i - 1));
        }
        LMonomial m = lm_y(n - 1, n, -1);
        m = lm_mul(m, lm_y(n, n - 2));
        return lm_mul(m, lm_y(n, n));
      }
      const int i = -b;
      if (i <= n - 1) {
        LMonomial m = y_if(i - 1, 2 * n + 2 - i, 1, 1, n);
        return lm_mul(m, lm_y(i, 2 * n + 3 - i, -1));
      }
      LMonomial m = lm_y(n - 1, n + 2);
      m = lm_mul(m, lm_y(n, n + 2, -1));
      return lm_mul(m, lm_y(n, n + 4, -1));
    }
    case LieType::D: {
      if (b > 0) {
        const int i = b;
        if (i <= n - 2) {
          LMonomial m = y_if(i - 1, 2 * i, -1, 1, n);
          return lm_mul(m, lm_y(i, 2 * i - 2));
        }
        if (i == n - 1) {
          LMonomial m = y_if(n - 2, 2 * (n - 1), -1, 1, n);
          m = lm_mul(m, lm_y(n - 1, 2 * (n - 2)));
          return lm_mul(m, lm_y(n, 2 * (n - 2)));
        }
        LMonomial m = lm_y(n - 1, 2 * n, -1);
        return lm_mul(m, lm_y(n, 2 * (n - 2)));
      }
      const int i = -b;
      if (i <= n - 2) {
        LMonomial m = y_if(i - 1, 2 * (2 * n - 2 - i), 1, 1, n);
        return lm_mul(m, lm_y(i, 2 * (2 * n - 1 - i), -1));
      }
      if (i == n - 1) {
        LMonomial m = y_if(n - 2, 2 * (n - 1), 1, 1, n);
        m = lm_mul(m, lm_y(n - 1, 2 * n, -1));
        return lm_mul(m, lm_y(n, 2 * n, -1));
      }
      LMonomial m = lm_y(n - 1, 2 * (n - 2));
      return lm_mul(m, lm_y(n, 2 * n, -1));
    }
  }
  throw std::logic_error("phi: unreachable");
}

LMonomial q1_hat_prefix(const AlgebraContext& ctx, bool barredZero) {
  if (ctx.type() != LieType::C) {
    throw std::invalid_argument("q1_hat_prefix: type C only");
  }
  const int n = ctx.rank();
  if (!barredZero) {
    return lm_mul(lm_y(n, n), lm_y(n, n + 2, -1));
  }
  LMonomial m = lm_x(x_of_box(ctx, bar(n)));
  m = lm_mul(m, lm_y(n - 1, n, -1));
  m = lm_mul(m, lm_y(n - 1, n + 2));
  m = lm_mul(m, lm_y(n, n - 2));
  return lm_mul(m, lm_y(n, n + 4, -1));
}

namespace {

/// One multiplicand family of a basic-series summand: the A^{-1}-string
/// prod_{l=1..count} A^{-1}_{node, q^((dBase + dStep*l)/2) z}.
struct QGroup {
  int node = 0;
  long long count = 0;
  int dBase = 0;
  int dStep = 0;
};

/// One summation of a basic series: coordinates k[0..ncoords-1] with lower
/// bounds minVal, exact affine total A^{-1}-count heightOf (used both to
/// enumerate and to prune), an optional admissibility filter (parity and the
/// like; inadmissible tuples are skipped but enumeration continues), and the
/// k -> families map.
struct SumSpec {
  int ncoords = 0;
  std::vector<long long> minVal;
  std::function<Rational(const std::vector<long long>&)> heightOf;
  std::function<bool(const std::vector<long long>&)> admissible;
  std::function<std::vector<QGroup>(const std::vector<long long>&)> groups;
  LMonomial prefix;
};

long long suffix_sum(const std::vector<long long>& k, int from) {
  long long s = 0;
  for (size_t c = std::max(from, 0); c < k.size(); ++c) s += k[c];
  return s;
}

void emit_term(const AlgebraContext& ctx, GradedSeries& out, const SumSpec& spec,
               const std::vector<long long>& k, const Rational& expectHeight, int dBase) {
  LMonomial m = spec.prefix;
  for (const QGroup& g : spec.groups(k)) {
    if (g.count < 0) throw std::logic_error("basic series: negative family count");
    for (long long l = 1; l <= g.count; ++l) {
      m = lm_mul(m, gen_a_inv(ctx, g.node, g.dBase + g.dStep * static_cast<int>(l)));
    }
  }
  if (lm_height(ctx, m) != expectHeight) {
    throw std::logic_error("basic series: term height mismatch");
  }
  out.accumulate(lm_shift_z(m, dBase), Int(1));
}

void dfs_coords(const AlgebraContext& ctx, GradedSeries& out, const SumSpec& spec,
                const Rational& budget, const Rational& prefixHeight, int dBase,
                std::vector<long long>& k, int c) {
  if (c == spec.ncoords) {
    if (spec.admissible && !spec.admissible(k)) return;
    emit_term(ctx, out, spec, k, prefixHeight + spec.heightOf(k), dBase);
    return;
  }
  for (k[c] = spec.minVal[c]; spec.heightOf(k) <= budget; ++k[c]) {
    dfs_coords(ctx, out, spec, budget, prefixHeight, dBase, k, c + 1);
  }
  k[c] = spec.minVal[c];
}

void accumulate_sum(const AlgebraContext& ctx, GradedSeries& out, const SumSpec& spec,
                    int relD, int dBase) {
  const Rational prefixHeight = abs_height(ctx, spec.prefix.x);
  const Rational budget = Rational(relD) - prefixHeight;
  std::vector<long long> k = spec.minVal;
  if (spec.heightOf(k) > budget) return;
  // Every coordinate must raise the total count, otherwise the enumeration
  // would not terminate.
  const Rational base = spec.heightOf(k);
  for (int c = 0; c < spec.ncoords; ++c) {
    k[c] += 1;
    if (!(spec.heightOf(k) > base)) {
      throw std::logic_error("basic series: coordinate with non-positive height step");
    }
    k[c] -= 1;
  }
  dfs_coords(ctx, out, spec, budget, prefixHeight, dBase, k, 0);
}

using Coords = std::vector<long long>;

SumSpec spec_a(const AlgebraContext& ctx, int i) {
  const int n = ctx.rank();
  SumSpec s;
  s.ncoords = n + 1 - i;  // k_{i+1}, ..., k_{n+1}
  s.minVal.assign(s.ncoords, 0);
  s.heightOf = [i, n](const Coords& k) {
    long long h = 0;
    for (int j = i; j <= n; ++j) h += suffix_sum(k, j - i);
    return Rational(h);
  };
  s.groups = [i, n](const Coords& k) {
    std::vector<QGroup> g;
    for (int j = i; j <= n; ++j) {
      g.push_back({j, suffix_sum(k, j - i), 2 * j + 2, -4});
    }
    return g;
  };
  s.prefix = phi(ctx, i);
  return s;
}

// Type B, unbarred i: coordinates (k_{i+1}..k_n, k_{nbar}..k_{1bar}); the
// second summand bumps every unbarred-family count by one.
SumSpec spec_b_unbarred(const AlgebraContext& ctx, int i, bool second) {
  const int n = ctx.rank();
  SumSpec s;
  s.ncoords = (n - i) + n;
  s.minVal.assign(s.ncoords, 0);
  const long long bump = second ? 1 : 0;
  auto kPlus = [i](const Coords& k, int j) { return suffix_sum(k, j - i); };
  auto kBar = [i, n](const Coords& k, int j) { return suffix_sum(k, 2 * n - i - j); };
  s.heightOf = [=](const Coords& k) {
    long long h = 0;
    for (int j = i; j <= n; ++j) h += kPlus(k, j) + bump;
    for (int j = 1; j <= n; ++j) h += kBar(k, j);
    return Rational(h);
  };
  s.groups = [=](const Coords& k) {
    std::vector<QGroup> g;
    for (int j = i; j <= n; ++j) g.push_back({j, kPlus(k, j) + bump, 2 * j + 2, -4});
    for (int j = 1; j <= n; ++j) g.push_back({j, kBar(k, j), 4 * n - 2 * j, -4});
    return g;
  };
  s.prefix = phi(ctx, i);
  return s;
}

// Barred boxes have the same shape in types B and D up to the barred-family
// base shift: coordinates (k_{(i-1)bar}..k_{1bar}).
SumSpec spec_barred_tail(const AlgebraContext& ctx, int i, int barDBase0) {
  SumSpec s;
  s.ncoords = i - 1;
  s.minVal.assign(s.ncoords, 0);
  auto kBar = [i](const Coords& k, int j) { return suffix_sum(k, i - 1 - j); };
  s.heightOf = [=](const Coords& k) {
    long long h = 0;
    for (int j = 1; j <= i - 1; ++j) h += kBar(k, j);
    return Rational(h);
  };
  s.groups = [=](const Coords& k) {
    std::vector<QGroup> g;
    for (int j = 1; j <= i - 1; ++j) g.push_back({j, kBar(k, j), barDBase0 - 2 * j, -4});
    return g;
  };
  s.prefix = phi(ctx, bar(i));
  return s;
}

SumSpec spec_c_unbarred(const AlgebraContext& ctx, int i) {
  const int n = ctx.rank();
  SumSpec s;
  s.ncoords = (n - i) + 1 + n;  // (k_{i+1}..k_n, k_0, k_{nbar}..k_{1bar})
  s.minVal.assign(s.ncoords, 0);
  const int posZero = n - i;
  auto kPlus = [=](const Coords& k, int j) {
    // K_{j+1} counts k_0 twice.
    return suffix_sum(k, j - i) + k[posZero];
  };
  auto kBar = [=](const Coords& k, int j) { return suffix_sum(k, 2 * n - i + 1 - j); };
  auto kNbar = [=](const Coords& k) { return suffix_sum(k, n - i + 1); };
  s.heightOf = [=](const Coords& k) {
    long long h = k[posZero] + kNbar(k);
    for (int j = i; j <= n - 1; ++j) h += kPlus(k, j);
    for (int j = 1; j <= n - 1; ++j) h += kBar(k, j);
    return Rational(h);
  };
  s.groups = [=](const Coords& k) {
    std::vector<QGroup> g;
    for (int j = i; j <= n - 1; ++j) g.push_back({j, kPlus(k, j), 1 + j, -2});
    for (int j = 1; j <= n - 1; ++j) g.push_back({j, kBar(k, j), 2 * n + 3 - j, -2});
    g.push_back({n, kNbar(k), n + 2, -2});
    g.push_back({n, k[posZero], n + 2 - 2 * static_cast<int>(kNbar(k)), -4});
    return g;
  };
  s.prefix = phi(ctx, i);
  return s;
}

SumSpec spec_c_hat(const AlgebraContext& ctx, bool barredZero) {
  const int n = ctx.rank();
  SumSpec s;
  s.ncoords = n;  // (k_{nbar}..k_{1bar})
  s.minVal.assign(s.ncoords, 0);
  auto kBar = [=](const Coords& k, int j) { return suffix_sum(k, n - j); };
  auto kNbar = [=](const Coords& k) { return suffix_sum(k, 0); };
  s.heightOf = [=](const Coords& k) {
    Rational h(0);
    for (int j = 1; j <= n - 1; ++j) h = h + Rational(kBar(k, j));
    if (barredZero) {
      h = h + Rational(kNbar(k) - 1, 2);
    } else {
      h = h + Rational(kNbar(k), 2);
    }
    return h;
  };
  s.admissible = [=](const Coords& k) { return (kNbar(k) % 2 == 0) != barredZero; };
  s.groups = [=](const Coords& k) {
    std::vector<QGroup> g;
    for (int j = 1; j <= n - 1; ++j) g.push_back({j, kBar(k, j), 2 * n + 3 - j, -2});
    if (barredZero) {
      g.push_back({n, (kNbar(k) - 1) / 2, n + 2, -4});
    } else {
      g.push_back({n, kNbar(k) / 2, n + 4, -4});
    }
    return g;
  };
  s.prefix = q1_hat_prefix(ctx, barredZero);
  return s;
}

SumSpec spec_c_barred(const AlgebraContext& ctx, int i) {
  const int n = ctx.rank();
  SumSpec s;
  s.ncoords = i - 1;  // (k_{(i-1)bar}..k_{1bar})
  s.minVal.assign(s.ncoords, 0);
  auto kBar = [i](const Coords& k, int j) { return suffix_sum(k, i - 1 - j); };
  s.heightOf = [=](const Coords& k) {
    long long h = 0;
    for (int j = 1; j <= i - 1; ++j) h += kBar(k, j);
    return Rational(h);
  };
  s.groups = [=](const Coords& k) {
    std::vector<QGroup> g;
    for (int j = 1; j <= i - 1; ++j) g.push_back({j, kBar(k, j), 2 * n + 3 - j, -2});
    return g;
  };
  s.prefix = phi(ctx, bar(i));
  return s;
}

// Type D, unbarred i <= n-1, summand without k_{nbar}:
// coordinates (k_{i+1}..k_n, k_{(n-1)bar}..k_{1bar}).
SumSpec spec_d_sum1(const AlgebraContext& ctx, int i) {
  const int n = ctx.rank();
  SumSpec s;
  s.ncoords = (n - i) + (n - 1);
  s.minVal.assign(s.ncoords, 0);
  auto kPlus = [i](const Coords& k, int j) { return suffix_sum(k, j - i); };
  auto kBar = [=](const Coords& k, int j) { return suffix_sum(k, 2 * n - 1 - i - j); };
  auto kTop = [=](const Coords& k) { return suffix_sum(k, n - i); };
  s.heightOf = [=](const Coords& k) {
    long long h = kTop(k);
    for (int j = 1; j <= n - 2; ++j) h += kBar(k, j);
    for (int j = i; j <= n - 1; ++j) h += kPlus(k, j);
    return Rational(h);
  };
  s.groups = [=](const Coords& k) {
    std::vector<QGroup> g;
    for (int j = 1; j <= n - 2; ++j) g.push_back({j, kBar(k, j), 4 * n - 2 - 2 * j, -4});
    g.push_back({n, kTop(k), 2 * n, -4});
    for (int j = i; j <= n - 1; ++j) g.push_back({j, kPlus(k, j), 2 * j + 2, -4});
    return g;
  };
  s.prefix = phi(ctx, i);
  return s;
}

// Type D, unbarred i <= n-1, summand through the other fork branch
// (k_{nbar} >= 1 replaces k_n): coordinates
// (k_{i+1}..k_{n-1}, k_{nbar}, k_{(n-1)bar}..k_{1bar}).
SumSpec spec_d_sum2(const AlgebraContext& ctx, int i) {
  const int n = ctx.rank();
  SumSpec s;
  s.ncoords = (n - 1 - i) + 1 + (n - 1);
  s.minVal.assign(s.ncoords, 0);
  s.minVal[n - 1 - i] = 1;
  auto kPlus = [i](const Coords& k, int j) { return suffix_sum(k, j - i); };
  auto kBar = [=](const Coords& k, int j) { return suffix_sum(k, 2 * n - 1 - i - j); };
  auto kNbar = [=](const Coords& k) { return suffix_sum(k, n - 1 - i); };
  s.heightOf = [=](const Coords& k) {
    long long h = kNbar(k);
    for (int j = 1; j <= n - 1; ++j) h += kBar(k, j);
    for (int j = i; j <= n - 2; ++j) h += kPlus(k, j);
    return Rational(h);
  };
  s.groups = [=](const Coords& k) {
    std::vector<QGroup> g;
    for (int j = 1; j <= n - 1; ++j) g.push_back({j, kBar(k, j), 4 * n - 2 - 2 * j, -4});
    g.push_back({n, kNbar(k), 2 * n, -4});
    for (int j = i; j <= n - 2; ++j) g.push_back({j, kPlus(k, j), 2 * j + 2, -4});
    return g;
  };
  s.prefix = phi(ctx, i);
  return s;
}

// Type D, box n: coordinates (k_{(n-1)bar}..k_{1bar}).
SumSpec spec_d_top(const AlgebraContext& ctx) {
  const int n = ctx.rank();
  SumSpec s;
  s.ncoords = n - 1;
  s.minVal.assign(s.ncoords, 0);
  auto kBar = [=](const Coords& k, int j) { return suffix_sum(k, n - 1 - j); };
  auto kTop = [=](const Coords& k) { return suffix_sum(k, 0); };
  s.heightOf = [=](const Coords& k) {
    long long h = kTop(k);
    for (int j = 1; j <= n - 2; ++j) h += kBar(k, j);
    return Rational(h);
  };
  s.groups = [=](const Coords& k) {
    std::vector<QGroup> g;
    for (int j = 1; j <= n - 2; ++j) g.push_back({j, kBar(k, j), 4 * n - 2 - 2 * j, -4});
    g.push_back({n, kTop(k), 2 * n, -4});
    return g;
  };
  s.prefix = phi(ctx, n);
  return s;
}

}  // namespace

GradedSeries build_q1_hat(const AlgebraContext& ctx, bool barredZero, int relD,
                          int dBase) {
  if (ctx.type() != LieType::C) {
    throw std::invalid_argument("build_q1_hat: type C only");
  }
  GradedSeries out = GradedSeries::zero(ctx, Height::of(Rational(relD)));
  accumulate_sum(ctx, out, spec_c_hat(ctx, barredZero), relD, dBase);
  return out;
}

GradedSeries build_q1(const AlgebraContext& ctx, BoxIndex b, int relD, int dBase) {
  if (!ctx.valid_index(b)) throw std::out_of_range("build_q1: box index");
  GradedSeries out = GradedSeries::zero(ctx, Height::of(Rational(relD)));
  const int n = ctx.rank();
  switch (ctx.type()) {
    case LieType::A:
      accumulate_sum(ctx, out, spec_a(ctx, b), relD, dBase);
      return out;
    case LieType::B:
      if (b > 0) {
        accumulate_sum(ctx, out, spec_b_unbarred(ctx, b, false), relD, dBase);
        accumulate_sum(ctx, out, spec_b_unbarred(ctx, b, true), relD, dBase);
      } else {
        accumulate_sum(ctx, out, spec_barred_tail(ctx, -b, 4 * n), relD, dBase);
      }
      return out;
    case LieType::C:
      if (b > 0) {
        accumulate_sum(ctx, out, spec_c_unbarred(ctx, b), relD, dBase);
      } else if (b == 0) {
        accumulate_sum(ctx, out, spec_c_hat(ctx, false), relD, dBase);
        accumulate_sum(ctx, out, spec_c_hat(ctx, true), relD, dBase);
      } else {
        accumulate_sum(ctx, out, spec_c_barred(ctx, -b), relD, dBase);
      }
      return out;
    case LieType::D:
      if (b == n) {
        accumulate_sum(ctx, out, spec_d_top(ctx), relD, dBase);
      } else if (b > 0) {
        accumulate_sum(ctx, out, spec_d_sum1(ctx, b), relD, dBase);
        accumulate_sum(ctx, out, spec_d_sum2(ctx, b), relD, dBase);
      } else {
        accumulate_sum(ctx, out, spec_barred_tail(ctx, -b, 4 * n - 2), relD, dBase);
      }
      return out;
  }
  throw std::logic_error("build_q1: unreachable");
}

LMonomial phi_tuple(const AlgebraContext& ctx, const std::vector<BoxIndex>& J) {
  const int a = static_cast<int>(J.size());
  LMonomial m = lm_one();
  for (int kk = 1; kk <= a; ++kk) {
    LMonomial f = phi(ctx, J[kk - 1]);
    m = lm_mul(m, lm_shift_z(f, ctx.dd1() * (a + 1 - 2 * kk)));
  }
  return m;
}

}  // namespace qcr
