#include <doctest.h>

#include "qthook/errors.hpp"
#include "qthook/monomial.hpp"
#include "qthook/qtpoint.hpp"
#include "qthook/rational.hpp"
#include "qthook/series.hpp"
#include "qthook/varlabel.hpp"

using namespace qthook;

namespace {
Monomial zz(int k, int e = 1) { return Monomial::var(VarLabel::z(k), e); }
}  // namespace

TEST_CASE("scalar text round trips") {
  CHECK(scalar_str(scalar_parse("-3/7")) == "-3/7");
  CHECK(scalar_str(scalar_parse("5")) == "5");
  CHECK(scalar_str(scalar_parse("10/4")) == "5/2");  // canonicalized
  CHECK((scalar_parse("1/2") + scalar_parse("1/3") == scalar_parse("5/6")));
}

TEST_CASE("variable labels order and round trip") {
  for (const char* text : {"z0", "z-2", "z12", "z0'", "a", "ax", "u1"})
    CHECK(VarLabel::parse(text).str() == text);
  CHECK(VarLabel::z(-1) < VarLabel::z(0));
  CHECK(VarLabel::z(5) < VarLabel::zprime());
  CHECK(VarLabel::zprime() < VarLabel::named("a"));
  CHECK(VarLabel::named("a") < VarLabel::named("b"));
  CHECK_THROWS_AS(VarLabel::named("z3"), InvalidSpec);   // would collide with z(3)
  CHECK_THROWS_AS(VarLabel::named("z0'"), InvalidSpec);
}

TEST_CASE("monomial algebra and canonical order") {
  const Monomial one;
  CHECK(one.is_one());
  CHECK(one.str() == "1");
  CHECK((zz(0) * zz(1)).str() == "z0*z1");
  CHECK((zz(0, 2)).str() == "z0^2");
  CHECK((zz(0) * zz(0).inverse()).is_one());
  CHECK((zz(0, 3).pow(2) == zz(0, 6)));
  CHECK(zz(0, -1).degree2() == -2);
  CHECK_FALSE(zz(0, -1).nonnegative());

  // degree first, then factor sequence; on equal labels higher exponent first
  CHECK(one < zz(0));
  CHECK(zz(0) < zz(1));
  CHECK(zz(1) < zz(0, 2));           // degree 1 < degree 2
  CHECK(zz(0, 2) < zz(0) * zz(1));   // z0^2 before z0*z1

  const Monomial half = Monomial::var_half(VarLabel::z(0), 1);
  CHECK(half.str() == "z0^(1/2)");
  CHECK_FALSE(half.integral());
  CHECK((half * half == zz(0)));

  CHECK(((zz(0) * zz(1, 2)).substituted(VarLabel::z(1), VarLabel::z(0)) == zz(0, 3)));
  CHECK((Monomial::var(VarLabel::zprime()) * zz(1))
            .substituted(VarLabel::zprime(), VarLabel::z(0))
            .str() == "z0*z1");
  CHECK(zz(3).exp2_of(VarLabel::z(3)) == 2);
  CHECK(zz(3).exp2_of(VarLabel::z(4)) == 0);
}

TEST_CASE("series arithmetic respects the truncation bound") {
  TruncatedSeries a(1);
  a.add_term(Monomial(), 1);
  a.add_term(zz(0), 1);
  const TruncatedSeries sq = a * a;  // (1+z0)^2 at D=1
  TruncatedSeries expect(1);
  expect.add_term(Monomial(), 1);
  expect.add_term(zz(0), 2);
  CHECK((sq == expect));

  TruncatedSeries s(2);
  s.add_term(zz(0, 3), 7);  // beyond the bound: dropped
  CHECK(s.is_zero());
  s.add_term(zz(0), 1);
  s.add_term(zz(0), -1);  // cancels: not stored
  CHECK(s.is_zero());
  CHECK(s.min_degree() == 3);  // bound + 1 when zero
}

TEST_CASE("laurent monomial multiplication checks genuineness per term") {
  TruncatedSeries s(3);
  s.add_term(zz(0) * zz(1), 1);
  s.mul_monomial(zz(0, -1));
  CHECK((s.coefficient(zz(1)) == Scalar(1)));
  TruncatedSeries bad(3);
  bad.add_term(Monomial(), 1);
  CHECK_THROWS_AS(bad.mul_monomial(zz(0, -1)), InvalidMonomial);
}

TEST_CASE("series substitution merges colliding terms") {
  const VarLabel zp = VarLabel::zprime();
  TruncatedSeries s(2);
  s.add_term(Monomial::var(zp) * zz(1), 1);
  CHECK((s.substituted(zp, VarLabel::z(0)).coefficient(zz(0) * zz(1)) == Scalar(1)));

  TruncatedSeries t(2);
  t.add_term(zz(0), 1);
  t.add_term(Monomial::var(zp), 1);
  CHECK((t.substituted(zp, VarLabel::z(0)).coefficient(zz(0)) == Scalar(2)));

  TruncatedSeries u(2);
  u.add_term(zz(1), 5);
  CHECK((u.substituted(zp, VarLabel::z(0)) == u));  // no occurrence: unchanged
}

TEST_CASE("first mismatch reports the smallest differing monomial") {
  TruncatedSeries a(2), b(2);
  a.add_term(Monomial(), 1);
  a.add_term(zz(0), 1);
  b.add_term(Monomial(), 1);
  b.add_term(zz(0), 2);
  b.add_term(zz(1), 1);
  auto mm = TruncatedSeries::first_mismatch(a, b);
  REQUIRE(mm.has_value());
  CHECK((mm->monomial == zz(0)));
  CHECK((mm->lhs == Scalar(1)));
  CHECK((mm->rhs == Scalar(2)));
  CHECK_FALSE(TruncatedSeries::first_mismatch(a, a).has_value());
}

TEST_CASE("point construction rejects degenerate coordinates") {
  CHECK_THROWS_AS(make_qt_point(Scalar(0), scalar_parse("1/2")), InvalidSpec);
  CHECK_THROWS_AS(make_qt_point(Scalar(1), scalar_parse("1/2")), InvalidSpec);
  CHECK_THROWS_AS(make_qt_point(scalar_parse("1/2"), Scalar(-1)), InvalidSpec);
  const QtPoint pt = make_qt_point(scalar_parse("2/5"), scalar_parse("2/5"));
  CHECK((pt.q == pt.t));  // q == t is legal, just never sampled
}

TEST_CASE("sampler is deterministic and draws valid proper fractions") {
  for (std::uint64_t seed : {0ull, 1ull, 7ull, 123456789ull}) {
    const QtPoint a = sample_qt_point(seed);
    const QtPoint b = sample_qt_point(seed);
    CHECK((a.q == b.q));
    CHECK((a.t == b.t));
    CHECK((a.q != a.t));
    CHECK((abs(a.q) < 1));
    CHECK((abs(a.t) < 1));
    CHECK((a.q != 0));
    CHECK((a.t != 0));
  }
}

TEST_CASE("deformation factor: pinned values and recurrence") {
  const FCache fc(make_qt_point(scalar_parse("1/2"), scalar_parse("1/3")));
  CHECK((fc.f(0, 5) == Scalar(1)));
  // f(1;0) = (1-t)/(1-q)
  CHECK((fc.f(1, 0) == scalar_parse("4/3")));
  CHECK((fc.f(2, 1) == scalar_parse("544/495")));
  // f(n;m) = f(n-1;m) * (1 - q^{n-1} t^{m+1}) / (1 - q^n t^m)
  const Scalar q = fc.point().q, t = fc.point().t;
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= 4; ++m) {
      Scalar qn1(1), qn(1), tm(1), tm1(1);
      for (int i = 0; i < n - 1; ++i) qn1 *= q;
      for (int i = 0; i < n; ++i) qn *= q;
      for (int i = 0; i < m; ++i) tm *= t;
      for (int i = 0; i < m + 1; ++i) tm1 *= t;
      CHECK((fc.f(n, m) == fc.f(n - 1, m) * (1 - qn1 * tm1) / (1 - qn * tm)));
    }
}

TEST_CASE("deformation factor collapses to 1 at q = t") {
  const FCache fc(make_qt_point(scalar_parse("2/5"), scalar_parse("2/5")));
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 4; ++m) CHECK((fc.f(n, m) == Scalar(1)));
}

TEST_CASE("vanishing denominator is reported, not divided by") {
  const FCache fc(make_qt_point(Scalar(2), scalar_parse("1/2")));
  CHECK_THROWS_AS(fc.f(1, 1), DegenerateDenominator);  // 1 - q t = 0
}

TEST_CASE("F(x) series: coefficients, classical limit, degree bound") {
  const FCache fc(make_qt_point(scalar_parse("1/2"), scalar_parse("1/3")));
  const TruncatedSeries fs = f_series(zz(0), fc, 6);
  for (int n = 0; n <= 6; ++n) CHECK((fs.coefficient(zz(0, n)) == fc.f(n, 0)));
  // coefficient of x^2 = ((1-t)/(1-q)) * ((1-qt)/(1-q^2))
  const Scalar q = fc.point().q, t = fc.point().t;
  CHECK((fs.coefficient(zz(0, 2)) ==
         (1 - t) / (1 - q) * (1 - q * t) / (1 - q * q)));

  const FCache cl(make_qt_point(scalar_parse("2/5"), scalar_parse("2/5")));
  CHECK((f_series(zz(0), cl, 6) == geometric_series(zz(0), 6)));

  // x = z0 z1 at D=3: only n <= 1 fits
  const TruncatedSeries fs2 = f_series(zz(0) * zz(1), fc, 3);
  CHECK(fs2.terms().size() == 2);
  CHECK((fs2.coefficient(Monomial()) == Scalar(1)));
  CHECK((fs2.coefficient(zz(0) * zz(1)) == fc.f(1, 0)));

  // product over F at q = t matches the plain geometric product
  const std::vector<Monomial> xs = {zz(1), zz(0) * zz(1)};
  CHECK((product_f_series(xs, cl, 2) == product_geometric(xs, 2)));
}

TEST_CASE("geometric series helpers") {
  const TruncatedSeries g = geometric_series(zz(0), 3);
  for (int n = 0; n <= 3; ++n) CHECK((g.coefficient(zz(0, n)) == Scalar(1)));
  CHECK_THROWS_AS(geometric_series(Monomial(), 3), InvalidMonomial);
  const TruncatedSeries pg = product_geometric({zz(1), zz(0) * zz(1)}, 2);
  TruncatedSeries expect(2);
  expect.add_term(Monomial(), 1);
  expect.add_term(zz(1), 1);
  expect.add_term(zz(1, 2), 1);
  expect.add_term(zz(0) * zz(1), 1);
  CHECK((pg == expect));
}
