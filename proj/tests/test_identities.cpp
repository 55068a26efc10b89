#include <algorithm>

#include "doctest.h"
#include "qcharrel/identities.hpp"

using namespace qcr;

namespace {

void expect_pass(const CheckResult& r) {
  CAPTURE(r.detail);
  CAPTURE(r.witness);
  CHECK(r.status == CheckStatus::pass);
}

bool has_zero(const std::vector<BoxIndex>& J) {
  return std::count(J.begin(), J.end(), 0) > 0;
}

}  // namespace

TEST_CASE("status strings") {
  CHECK(status_str(CheckStatus::pass) == "pass");
  CHECK(status_str(CheckStatus::fail) == "fail");
  CHECK(status_str(CheckStatus::conditional_pass) == "conditional-pass");
  CHECK(status_str(CheckStatus::skipped) == "skipped");
}

TEST_CASE("wronskian identity") {
  expect_pass(check_wronskian(context(LieType::A, 1), Rational(4)));
  expect_pass(check_wronskian(context(LieType::A, 2), Rational(3)));
  CHECK_THROWS_AS(check_wronskian(context(LieType::B, 2), Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("exchange relation") {
  SUBCASE("A2, every increasing pair at both sizes") {
    const auto& ctx = context(LieType::A, 2);
    for (int a : {1, 2}) {
      auto tuples = ctx.increasing_tuples(a);
      for (const auto& J1 : tuples)
        for (const auto& J2 : tuples) expect_pass(check_plucker(ctx, J1, J2, Rational(2)));
    }
  }
  SUBCASE("B2 spot pairs") {
    const auto& ctx = context(LieType::B, 2);
    expect_pass(check_plucker(ctx, {1}, {-2}, Rational(2)));
    expect_pass(check_plucker(ctx, {1, 2}, {2, -1}, Rational(2)));
  }
  SUBCASE("C2 pairs involving the middle entry") {
    const auto& ctx = context(LieType::C, 2);
    expect_pass(check_plucker(ctx, {0}, {2}, Rational(2)));
    expect_pass(check_plucker(ctx, {1, 0}, {0, -1}, Rational(2)));
    expect_pass(check_plucker(ctx, {2, 0}, {1, -2}, Rational(2)));
  }
  SUBCASE("D4 spot pairs") {
    const auto& ctx = context(LieType::D, 4);
    expect_pass(check_plucker(ctx, {1, 2}, {3, 4}, Rational(1)));
    expect_pass(check_plucker(ctx, {3, -4}, {4, -3}, Rational(1)));
  }
  SUBCASE("a seeded sign mutation is caught") {
    // J2's head must be absent from J1 so the mutated exchange term is not a
    // repeated-column determinant (which would vanish and hide the flip).
    CheckResult r =
        check_plucker(context(LieType::A, 2), {2, 3}, {1, 2}, Rational(2), true);
    CHECK(r.status == CheckStatus::fail);
    CHECK_FALSE(r.witness.empty());
  }
}

TEST_CASE("reduced-column identities as checkers") {
  const auto& a2 = context(LieType::A, 2);
  expect_pass(check_delta_simplify(a2, 1, 1, Rational(2)));
  expect_pass(check_delta_simplify(a2, 2, 1, Rational(2)));
  for (const auto& J : a2.increasing_tuples(2))
    expect_pass(check_newrep_det(a2, J, Rational(2)));
}

TEST_CASE("type B last-node bilinear identity") {
  const auto& ctx = context(LieType::B, 2);
  SUBCASE("all 36 pairs shallow") {
    auto tuples = ctx.increasing_tuples(2);
    REQUIRE(tuples.size() == 6);
    for (const auto& J1 : tuples)
      for (const auto& J2 : tuples) expect_pass(check_bn_conj(ctx, J1, J2, Rational(2)));
  }
  SUBCASE("spot pairs deeper") {
    expect_pass(check_bn_conj(ctx, {1, 2}, {2, -1}, Rational(4)));
    expect_pass(check_bn_conj(ctx, {1, -2}, {2, -1}, Rational(4)));
    expect_pass(check_bn_conj(ctx, {-2, -1}, {1, 2}, Rational(4)));
  }
}

TEST_CASE("type C spin-node bilinear identities") {
  const auto& ctx = context(LieType::C, 2);
  for (int variant = 1; variant <= 4; ++variant) {
    CAPTURE(variant);
    const int need = variant <= 2 ? 1 : 2;
    const bool needZero = (variant == 2 || variant == 4);
    int count = 0;
    for (const auto& J : ctx.increasing_tuples(need)) {
      if (has_zero(J) != needZero) continue;
      expect_pass(check_cn_conj(ctx, variant, J, Rational(3)));
      ++count;
    }
    CHECK(count == (needZero ? (variant == 2 ? 1 : 4) : (variant == 1 ? 4 : 6)));
  }
  SUBCASE("rank without provider is skipped") {
    CheckResult r = check_cn_conj(context(LieType::C, 3), 1, {1, 2}, Rational(1));
    CHECK(r.status == CheckStatus::skipped);
    CHECK(r.detail.find("no R-series provider for C3") != std::string::npos);
  }
}

TEST_CASE("type C split-middle identities") {
  const auto& ctx = context(LieType::C, 2);
  expect_pass(check_cn_remark(ctx, 1, Rational(4)));
  expect_pass(check_cn_remark(ctx, 2, Rational(4)));
}

TEST_CASE("type D spin-node bilinear identities") {
  const auto& ctx = context(LieType::D, 4);
  SUBCASE("size n-2 tuples, both parity classes") {
    for (const auto& J : ctx.increasing_tuples(2)) {
      expect_pass(check_dn_conj1(ctx, J, 0, Rational(1)));
      expect_pass(check_dn_conj1(ctx, J, 1, Rational(1)));
    }
  }
  SUBCASE("spot tuples deeper") {
    expect_pass(check_dn_conj1(ctx, {1, -1}, 0, Rational(2)));
    expect_pass(check_dn_conj1(ctx, {2, 3}, 1, Rational(2)));
    expect_pass(check_dn_conj2(ctx, {1, 2, 3}, Rational(2)));
    expect_pass(check_dn_conj2(ctx, {2, -4, -3}, Rational(2)));
  }
  SUBCASE("size n-1 tuples") {
    int count = 0;
    for (const auto& J : ctx.increasing_tuples(3)) {
      expect_pass(check_dn_conj2(ctx, J, Rational(1)));
      ++count;
    }
    CHECK(count == 56);
  }
}

TEST_CASE("spin wrappers") {
  const auto& c2 = context(LieType::C, 2);
  for (const Eps& e : all_eps(2)) {
    expect_pass(check_spin_lead(c2, e));
    expect_pass(check_spin_char(c2, e, Rational(3)));
  }
  const auto& d4 = context(LieType::D, 4);
  for (const Eps& e : all_eps(4)) {
    expect_pass(check_spin_lead(d4, e));
    expect_pass(check_spin_char(d4, e, Rational(2)));
  }
  CHECK(check_spin_lead(context(LieType::C, 3), {1, 1, 1}).status ==
        CheckStatus::skipped);
}
