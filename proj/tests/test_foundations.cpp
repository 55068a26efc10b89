#include "doctest.h"
#include "qcharrel/builders.hpp"
#include "qcharrel/series.hpp"

using namespace qcr;

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(-4, 6) == Rational(-2, 3));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(7, 2) * Rational(2, 7) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(5, 10).str() == "1/2");
  CHECK(Rational(-3).str() == "-3");
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("box parsing round trip") {
  for (const char* s : {"1", "4", "2b", "11b", "0"}) {
    CHECK(box_str(box_parse(s)) == s);
  }
  CHECK(box_parse("3b") == -3);
  CHECK(bar(box_parse("3")) == box_parse("3b"));
  CHECK(tuple_str({1, -2}) == "(1,2b)");
  CHECK(tuple_parse("(1,2b)") == std::vector<BoxIndex>{1, -2});
  CHECK(tuple_parse("1,2b,0") == std::vector<BoxIndex>{1, -2, 0});
}

TEST_CASE("index sets and partial orders") {
  const auto& a2 = context(LieType::A, 2);
  CHECK(a2.index_set() == std::vector<BoxIndex>{1, 2, 3});
  CHECK(a2.num_x() == 3);
  CHECK(a2.dual_coxeter() == 3);

  const auto& b2 = context(LieType::B, 2);
  CHECK(b2.index_set() == std::vector<BoxIndex>{1, 2, -2, -1});
  CHECK(b2.dual_coxeter() == 3);
  CHECK(b2.dd(1) == 2);
  CHECK(b2.dd(2) == 1);

  const auto& c2 = context(LieType::C, 2);
  CHECK(c2.index_set() == std::vector<BoxIndex>{1, 2, 0, -2, -1});
  CHECK(c2.dual_coxeter() == 3);
  CHECK(c2.dd(1) == 1);
  CHECK(c2.dd(2) == 2);
  CHECK(c2.less(2, 0));
  CHECK(c2.less(0, -2));

  const auto& d4 = context(LieType::D, 4);
  CHECK(d4.index_set() == std::vector<BoxIndex>{1, 2, 3, 4, -4, -3, -2, -1});
  CHECK(d4.dual_coxeter() == 6);
  SUBCASE("n and n-bar are incomparable in type D") {
    CHECK(!d4.less(4, -4));
    CHECK(!d4.less(-4, 4));
    CHECK(!d4.comparable(4, -4));
    CHECK(d4.less(3, 4));
    CHECK(d4.less(3, -4));
    CHECK(d4.less(4, -3));
    CHECK(d4.less(-4, -3));
  }

  CHECK(c2.increasing_tuples(2).size() == 10);
  CHECK(d4.increasing_tuples(2).size() == 28);
  CHECK(b2.increasing_tuples(4).size() == 1);

  auto comp = c2.complement({2, -1});
  CHECK(comp == std::vector<BoxIndex>{1, 0, -2});
}

TEST_CASE("signature by inversions matches cycle parity") {
  for (const AlgebraContext* ctx :
       {&context(LieType::B, 2), &context(LieType::C, 2), &context(LieType::D, 3)}) {
    for (int a = 1; a <= std::min<int>(3, static_cast<int>(ctx->index_set().size())); ++a) {
      for (const auto& J : ctx->increasing_tuples(a)) {
        CHECK(signature(*ctx, J) == signature_by_cycles(*ctx, J));
      }
    }
  }
}

TEST_CASE("simple roots have height one in every type") {
  for (const AlgebraContext* ctx :
       {&context(LieType::A, 3), &context(LieType::B, 3), &context(LieType::C, 3),
        &context(LieType::D, 4)}) {
    for (int i = 1; i <= ctx->rank(); ++i) {
      CHECK(abs_height(*ctx, x_inv(e_alpha(*ctx, i))) == Rational(1));
    }
  }
}

TEST_CASE("box weights step along simple-root chains") {
  SUBCASE("type A") {
    const auto& ctx = context(LieType::A, 2);
    for (int i = 1; i <= 2; ++i) {
      CHECK(x_of_box(ctx, i + 1) ==
            x_mul(x_of_box(ctx, i), x_inv(e_alpha(ctx, i))));
    }
  }
  SUBCASE("type B: the bar step is two short-root steps") {
    const auto& ctx = context(LieType::B, 3);
    CHECK(x_of_box(ctx, 2) == x_mul(x_of_box(ctx, 1), x_inv(e_alpha(ctx, 1))));
    XWeight mid = x_mul(x_of_box(ctx, 3), x_inv(e_alpha(ctx, 3)));
    CHECK(mid.is_trivial());
    CHECK(x_of_box(ctx, -3) == x_inv(e_alpha(ctx, 3)));
  }
  SUBCASE("type C: the bar step is one long-root step") {
    const auto& ctx = context(LieType::C, 2);
    CHECK(x_of_box(ctx, -2) == x_mul(x_of_box(ctx, 2), x_inv(e_alpha(ctx, 2))));
    CHECK(x_of_box(ctx, 0).is_trivial());
  }
  SUBCASE("type D: the fork sends n-1 to n-bar and n to (n-1)-bar") {
    const auto& ctx = context(LieType::D, 4);
    CHECK(x_of_box(ctx, -4) == x_mul(x_of_box(ctx, 3), x_inv(e_alpha(ctx, 4))));
    CHECK(x_of_box(ctx, -3) == x_mul(x_of_box(ctx, 4), x_inv(e_alpha(ctx, 4))));
  }
}

TEST_CASE("box heights are symmetric around zero") {
  for (const AlgebraContext* ctx :
       {&context(LieType::B, 2), &context(LieType::C, 2), &context(LieType::D, 4)}) {
    for (BoxIndex b : ctx->index_set()) {
      if (b == 0) {
        CHECK(abs_height(*ctx, x_of_box(*ctx, b)) == Rational(0));
      } else {
        CHECK(abs_height(*ctx, x_of_box(*ctx, b)) ==
              -abs_height(*ctx, x_of_box(*ctx, bar(b))));
      }
    }
  }
  // Type A is symmetric under reversing the box order.
  const auto& a2 = context(LieType::A, 2);
  for (int i = 1; i <= 3; ++i) {
    CHECK(abs_height(a2, x_of_box(a2, i)) == -abs_height(a2, x_of_box(a2, 4 - i)));
  }
  const auto& d4 = context(LieType::D, 4);
  CHECK(abs_height(d4, x_of_box(d4, 4)) == Rational(0));
  const auto& c2 = context(LieType::C, 2);
  CHECK(abs_height(c2, x_of_box(c2, 1)) == Rational(-3, 2));
}

TEST_CASE("graded series validity algebra") {
  const auto& ctx = context(LieType::C, 2);
  // x1 has height -3/2, x1^-1 has height +3/2.
  GradedSeries s = GradedSeries::zero(ctx, Height::of(Rational(2)));
  s.accumulate(lm_one(), Int(1));
  s.accumulate(lm_x(x_var_pow(1, Rational(-1))), Int(3));

  SUBCASE("terms beyond the validity bound are dropped") {
    GradedSeries t = s;
    t.accumulate(lm_x(x_var_pow(1, Rational(-2))), Int(5));  // height 3 > 2
    CHECK(t.size() == 2);
  }

  SUBCASE("product validity is min(Va + mb, Vb + ma)") {
    GradedSeries t = GradedSeries::zero(ctx, Height::of(Rational(5)));
    t.accumulate(lm_x(x_var_pow(1, Rational(-1))), Int(1));  // eff min 3/2
    GradedSeries p = s * t;
    // min(2 + 3/2, 5 + 0) = 7/2
    CHECK(p.valid() == Height::of(Rational(7, 2)));
    CHECK(p.coeff(lm_x(x_var_pow(1, Rational(-2)))) == Int(3));
  }

  SUBCASE("multiplying by an exact zero gives an exact zero") {
    GradedSeries z = GradedSeries::zero(ctx);
    GradedSeries p = s * z;
    CHECK(p.empty());
    CHECK(p.valid() == Height::infinite());
  }

  SUBCASE("scaling by a monomial shifts the validity bound") {
    GradedSeries p = scale(s, lm_x(x_var_pow(1, Rational(1))), Int(2));
    CHECK(p.valid() == Height::of(Rational(1, 2)));
    CHECK(p.coeff(lm_x(x_var_pow(1, Rational(1)))) == Int(2));
    // The height-3/2 term scaled to height 0 stays.
    CHECK(p.coeff(lm_one()) == Int(6));
  }

  SUBCASE("zero test requires coverage") {
    GradedSeries z = GradedSeries::zero(ctx, Height::of(Rational(1)));
    CHECK(z.is_zero_through(Rational(1)));
    CHECK_THROWS(z.is_zero_through(Rational(2)));
  }
}

TEST_CASE("serialization format is stable") {
  const auto& ctx = context(LieType::B, 2);
  GradedSeries s = GradedSeries::zero(ctx, Height::of(Rational(2)));
  s.accumulate(lm_y(1, 0), Int(1));
  s.accumulate(lm_mul(lm_y(2, 3, -1), lm_x(x_var_pow(2, Rational(-1)))), Int(-2));
  std::string text = s.serialize("demo");
  CHECK(text ==
        "qseries v1 label=demo ctx=B2 terms=2 valid=2\n"
        "0 | 1 | Y[1,0]\n"
        "1 | -2 | Y[2,3/2]^-1 x2^-1\n");
}

TEST_CASE("node transport preserves heights and relabels") {
  const auto& b2 = context(LieType::B, 2);
  const auto& c2 = context(LieType::C, 2);
  NodeTransport t = make_transport(b2, c2, {2, 1}, 0);

  CHECK(transport_x(t, x_var_pow(1, Rational(1))) ==
        x_mul(x_var_pow(1, Rational(1)), x_var_pow(2, Rational(1))));
  CHECK(transport_x(t, x_var_pow(2, Rational(1))) ==
        x_mul(x_var_pow(1, Rational(1)), x_var_pow(2, Rational(-1))));

  GradedSeries s = GradedSeries::zero(b2, Height::of(Rational(4)));
  s.accumulate(lm_mul(lm_y(1, 2), lm_x(x_var_pow(1, Rational(-1)))), Int(7));
  GradedSeries u = transport(t, s);
  CHECK(&u.ctx() == &c2);
  CHECK(u.valid() == Height::of(Rational(4)));
  LMonomial expect = lm_mul(
      lm_y(2, 2), lm_x(x_mul(x_var_pow(1, Rational(-1)), x_var_pow(2, Rational(-1)))));
  CHECK(u.coeff(expect) == Int(7));
  CHECK(abs_height(b2, x_var_pow(1, Rational(-1))) ==
        abs_height(c2, transport_x(t, x_var_pow(1, Rational(-1)))));

  SUBCASE("the spin-node swap of D4 maps vector to half-spin weights") {
    const auto& d4 = context(LieType::D, 4);
    NodeTransport s13 = make_transport(d4, d4, {3, 2, 1, 4}, 0);
    XWeight img = transport_x(s13, x_var_pow(1, Rational(1)));
    XWeight want = e_omega(d4, 3);
    CHECK(img == want);
    CHECK(abs_height(d4, img) == abs_height(d4, x_var_pow(1, Rational(1))));
  }
}

TEST_CASE("geometric expansion in the positive-height cone") {
  const auto& c2 = context(LieType::C, 2);
  SUBCASE("positive-height ratio expands directly") {
    XWeight m = x_mul(x_var_pow(1, Rational(-1)), x_var_pow(2, Rational(1)));  // height 1
    XSeries e = expand_geometric(c2, 1, m, Height::of(Rational(2)));
    CHECK(e.terms().size() == 3);  // 1 + m + m^2
    CHECK(e.terms().at(x_pow(m, Rational(2))) == Int(1));
  }
  SUBCASE("negative-height ratio is rewritten through the reciprocal") {
    XWeight m = x_var_pow(1, Rational(1));  // height -3/2
    XSeries e = expand_geometric(c2, 1, m, Height::of(Rational(2)));
    CHECK(e.terms().size() == 1);
    CHECK(e.terms().at(x_var_pow(1, Rational(-1))) == Int(-1));
  }
  SUBCASE("sign -1 alternates") {
    XWeight m = x_mul(x_var_pow(1, Rational(-1)), x_var_pow(2, Rational(1)));
    XSeries e = expand_geometric(c2, -1, m, Height::of(Rational(2)));
    CHECK(e.terms().at(m) == Int(-1));
    CHECK(e.terms().at(x_pow(m, Rational(2))) == Int(1));
  }
  SUBCASE("zero-height ratio is rejected") {
    const auto& d4 = context(LieType::D, 4);
    CHECK_THROWS(expand_geometric(d4, 1, x_var_pow(4, Rational(1)),
                                  Height::of(Rational(1))));
  }
}
