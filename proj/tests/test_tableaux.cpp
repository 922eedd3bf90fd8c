#include <doctest.h>

#include <algorithm>
#include <set>

#include "qthook/diagram.hpp"
#include "qthook/errors.hpp"
#include "qthook/ppartition.hpp"
#include "qthook/qtpoint.hpp"
#include "qthook/rational.hpp"

using namespace qthook;

namespace {
Monomial zz(int k, int e = 1) { return Monomial::var(VarLabel::z(k), e); }
QtPoint generic_pt() { return make_qt_point(scalar_parse("1/2"), scalar_parse("1/3")); }
}  // namespace

TEST_CASE("partition basics") {
  CHECK(Partition::parse("3,2,1").str() == "(3,2,1)");
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("0").empty());
  CHECK(Partition(std::vector<int>{3, 2, 0, 0}).length() == 2);  // zeros stripped
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), InvalidSpec);
  const Partition p = Partition::parse("3,1");
  CHECK(p.part(1) == 3);
  CHECK(p.part(2) == 1);
  CHECK(p.part(3) == 0);  // zero padding
  CHECK(p.size() == 4);
  CHECK((p.conjugate() == Partition::parse("2,1,1")));
  CHECK(p.is_strict());
  CHECK_FALSE(Partition::parse("2,2").is_strict());
  CHECK(Partition::parse("2,1").odd_columns() == 1);
  CHECK(dominated_by(Partition::parse("1,1,1"), Partition::parse("3")));
  CHECK_FALSE(dominated_by(Partition::parse("3"), Partition::parse("2,1")));
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_up_to(4).size() == 12);
  CHECK_THROWS_AS(StrictPartition::parse("2,2"), InvalidSpec);
}

TEST_CASE("interlacing and strips") {
  CHECK(interlaces(Partition::parse("3,1"), Partition::parse("2")));
  CHECK_FALSE(interlaces(Partition::parse("2,2"), Partition()));
  const auto ups = up_strips(Partition::parse("1"), 1);
  const std::set<Partition> upset(ups.begin(), ups.end());
  CHECK((upset == std::set<Partition>{Partition::parse("2"), Partition::parse("1,1")}));
  const auto downs = down_strips(Partition::parse("2,1"), 2);
  const std::set<Partition> downset(downs.begin(), downs.end());
  CHECK((downset == std::set<Partition>{Partition::parse("1")}));  // (2,1)/(1) strip
}

TEST_CASE("diagram cells") {
  const Diagram d1 = Diagram::shape(Partition::parse("1"));
  CHECK((d1.cells() == std::vector<Cell>{{1, 1}}));
  const Diagram s31 = Diagram::shifted(StrictPartition::parse("3,1"));
  CHECK((s31.cells() == std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}, {2, 2}}));
  CHECK(Diagram::shape(Partition::parse("2,2")).cell_count() == 4);
  CHECK(s31.column_length(2) == 2);
  CHECK(s31.column_length(3) == 1);
}

TEST_CASE("hook cells: arms, legs and the broken arm") {
  const Diagram d22 = Diagram::shape(Partition::parse("2,2"));
  auto sorted = [](std::vector<Cell> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK((sorted(d22.hook_cells({1, 1})) ==
         std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}}));
  const Diagram s31 = Diagram::shifted(StrictPartition::parse("3,1"));
  CHECK((sorted(s31.hook_cells({1, 2})) ==
         std::vector<Cell>{{1, 2}, {1, 3}, {2, 2}}));  // broken arm row 3 is empty
  CHECK((sorted(s31.hook_cells({1, 1})) ==
         std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}, {2, 2}}));  // row, column, row 2
  CHECK_THROWS_AS(s31.hook_cells({2, 1}), CellOutsideDiagram);
}

TEST_CASE("hook monomials: pinned values") {
  const Diagram d2 = Diagram::shape(Partition::parse("2"));
  CHECK((d2.hook_monomial({1, 1}) == zz(0) * zz(1)));
  const Diagram s31 = Diagram::shifted(StrictPartition::parse("3,1"));
  CHECK((s31.hook_monomial({1, 1}) == zz(0, 2) * zz(1) * zz(2)));
  CHECK((s31.hook_monomial({1, 2}) == zz(0) * zz(1) * zz(2)));
  CHECK((s31.hook_monomial({1, 3}) == zz(2)));
  CHECK((s31.hook_monomial({2, 2}) == zz(0)));
}

TEST_CASE("closed-form hooks equal the cell-set hooks") {
  for (const char* mu_text : {"1", "2,1", "3,1", "3,2,1", "4,2,1"}) {
    const StrictPartition mu = StrictPartition::parse(mu_text);
    const Diagram d = Diagram::shifted(mu);
    const int N = mu.part(1);
    for (const Cell& c : d.cells())
      CHECK((closed_hook_shifted(mu, N, c) == d.hook_monomial(c)));
    // a larger ambient N gives the same hooks
    for (const Cell& c : d.cells())
      CHECK((closed_hook_shifted(mu, N + 2, c) == d.hook_monomial(c)));
  }
  for (const char* lam_text : {"1", "2,2", "3,1", "4,2,1", "5,4,3,1"}) {
    const Partition lam = Partition::parse(lam_text);
    const Diagram d = Diagram::shape(lam);
    for (const Cell& c : d.cells())
      CHECK((closed_hook_shape(lam, c) == d.hook_monomial(c)));
  }
  // i <= j = r lands on tilde-z_{mu_i}
  const StrictPartition mu31 = StrictPartition::parse("3,1");
  CHECK((closed_hook_shifted(mu31, 3, {1, 2}) == tilde_z(3)));
  CHECK((closed_hook_shifted(mu31, 3, {2, 2}) == tilde_z(1)));
}

TEST_CASE("tilde-z, complement and epsilon word") {
  CHECK(tilde_z(0).is_one());
  CHECK((tilde_z(2) == zz(0) * zz(1)));
  const ComplementEpsilon ce =
      complement_and_epsilon(StrictPartition::parse("6,5,2"), 6);
  CHECK((ce.complement == std::vector<int>{4, 3, 1}));
  CHECK((ce.epsilon == std::vector<char>{'-', '+', '-', '-', '+', '+'}));
  CHECK_THROWS_AS(complement_and_epsilon(StrictPartition::parse("3,1"), 2),
                  NTooSmall);
}

TEST_CASE("frobenius decomposition") {
  const Frobenius f1 = frobenius_split(Partition::parse("1"));
  CHECK(f1.r == 1);
  CHECK((f1.arm.as_partition() == Partition::parse("1")));
  CHECK((f1.leg.as_partition() == Partition::parse("1")));
  const Frobenius f22 = frobenius_split(Partition::parse("2,2"));
  CHECK(f22.r == 2);
  CHECK((f22.arm.as_partition() == Partition::parse("2,1")));
  CHECK((f22.leg.as_partition() == Partition::parse("2,1")));
  const Frobenius f5431 = frobenius_split(Partition::parse("5,4,3,1"));
  CHECK(f5431.r == 3);
  CHECK((f5431.arm.as_partition() == Partition::parse("5,3,1")));
  CHECK((f5431.leg.as_partition() == Partition::parse("4,2,1")));
}

TEST_CASE("boundary reads of an array") {
  const Diagram s31 = Diagram::shifted(StrictPartition::parse("3,1"));
  const PPArray a(s31, {{0, 1, 2}, {3}});
  CHECK(a.entry(2, 2) == 3);
  CHECK(a.padded(2, 1) == 0);  // row > column on a shifted shape
  CHECK(a.padded(0, 3) == 0);
  CHECK(a.padded(-1, 1) == 0);
  CHECK(a.padded(1, 2) == 1);
  CHECK_THROWS_AS(a.padded(1, 4), CellOutsideDiagram);
  CHECK(a.total() == 6);
}

TEST_CASE("the worked trace example") {
  const Diagram d = Diagram::shifted(StrictPartition::parse("6,5,2"));
  const PPArray a(d, {{0, 0, 1, 2, 3, 3}, {1, 2, 3, 3, 3}, {2, 4}});
  CHECK(a.total() == 27);
  CHECK(a.json_text() == "[[0,0,1,2,3,3],[1,2,3,3,3],[2,4]]");
  const Monomial tm = trace_monomial(a);
  CHECK(tm.degree2() == 2 * 27);
  CHECK(tm.exp2_of(VarLabel::z(0)) == 2 * 3);  // diagonal sum 0+1+2
  const std::vector<Partition> tr = traces(a, 6);
  REQUIRE(tr.size() == 7);
  CHECK((tr[0] == Partition::parse("2,1")));
  CHECK((tr[1] == Partition::parse("4,2")));
  CHECK((tr[2] == Partition::parse("3,1")));
  CHECK((tr[3] == Partition::parse("3,2")));
  CHECK((tr[4] == Partition::parse("3,3")));
  CHECK((tr[5] == Partition::parse("3")));
  CHECK(tr[6].empty());
  CHECK((profile(a) == tr[0]));
  // interlacing pattern along the diagonals
  CHECK(interlaces(tr[1], tr[0]));
  CHECK(interlaces(tr[1], tr[2]));
  CHECK(interlaces(tr[3], tr[2]));
  CHECK(interlaces(tr[4], tr[3]));
  CHECK(interlaces(tr[4], tr[5]));
  CHECK(interlaces(tr[5], tr[6]));
}

TEST_CASE("enumeration counts and profile pinning") {
  long long n = 0;
  auto count = [&](const Diagram& d, int budget, std::optional<Partition> prof) {
    n = 0;
    enumerate_ppartitions(d, budget, prof, [&](const PPArray&) { ++n; });
    return n;
  };
  CHECK(count(Diagram::shape(Partition::parse("1")), 3, std::nullopt) == 4);
  CHECK(count(Diagram::shape(Partition::parse("2")), 2, std::nullopt) == 4);
  const Diagram s21 = Diagram::shifted(StrictPartition::parse("2,1"));
  // diagonal pinned to (1,1): minimum total is 3 > budget 2
  CHECK(count(s21, 2, Partition::parse("1,1")) == 0);
  CHECK(count(s21, 3, Partition::parse("1,1")) == 1);
  CHECK_THROWS_AS(
      enumerate_ppartitions(Diagram::shifted(StrictPartition::parse("2")), 4,
                            Partition::parse("1,1"), [](const PPArray&) {}),
      InfeasibleProfile);
  CHECK_THROWS_AS(
      enumerate_ppartitions(s21, 2, Partition::parse("3"), [](const PPArray&) {}),
      InfeasibleProfile);  // |tau| exceeds the budget
}

TEST_CASE("single-cell weight is the deformation factor") {
  const FCache fc(generic_pt());
  const Diagram d = Diagram::shape(Partition::parse("1"));
  for (int n = 0; n <= 5; ++n) {
    const PPArray a(d, {{n}});
    CHECK((weight_shape(a, fc) == fc.f(n, 0)));
  }
}

TEST_CASE("all weights collapse to 1 at q = t") {
  const FCache fc(make_qt_point(scalar_parse("2/5"), scalar_parse("2/5")));
  const Diagram dl = Diagram::shape(Partition::parse("2,1"));
  enumerate_ppartitions(dl, 4, std::nullopt, [&](const PPArray& a) {
    CHECK((weight_shape(a, fc) == Scalar(1)));
  });
  const Diagram dm = Diagram::shifted(StrictPartition::parse("2,1"));
  enumerate_ppartitions(dm, 4, std::nullopt, [&](const PPArray& a) {
    CHECK((weight_shifted(a, fc) == Scalar(1)));
    CHECK((weight_v(a, fc) == Scalar(1)));
  });
}

TEST_CASE("shifted weight factors through the profile") {
  const FCache fc(generic_pt());
  const Diagram d = Diagram::shifted(StrictPartition::parse("3,1"));
  enumerate_ppartitions(d, 5, std::nullopt, [&](const PPArray& a) {
    const TauFactors tf = tau_factors(profile(a), fc);
    CHECK((weight_shifted(a, fc) == tf.bel / tf.b * weight_v(a, fc)));
  });
}

TEST_CASE("tau factors: pinned values and odd-column law") {
  const FCache fc(generic_pt());
  const TauFactors empty = tau_factors(Partition(), fc);
  CHECK((empty.b == Scalar(1)));
  CHECK((empty.bel == Scalar(1)));
  CHECK(empty.odd_columns == 0);
  for (int n = 1; n <= 6; ++n)
    CHECK((tau_factors(Partition(std::vector<int>{n}), fc).b == fc.f(n, 0)));
  CHECK(tau_factors(Partition::parse("2,1"), fc).odd_columns == 1);
  for (const Partition& tau : partitions_up_to(8)) {
    int odd_rows = 0;
    for (int i = 1; i <= tau.length(); i += 2) odd_rows += tau.part(i);
    CHECK(2 * odd_rows == tau.size() + tau.odd_columns());
  }
}

TEST_CASE("unweighted trace series: pinned small cases") {
  const TruncatedSeries s1 =
      lhs_series(Diagram::shape(Partition::parse("1")), WeightKind::none, nullptr, 4);
  CHECK((s1 == geometric_series(zz(0), 4)));

  const TruncatedSeries s2 =
      lhs_series(Diagram::shape(Partition::parse("2")), WeightKind::none, nullptr, 2);
  TruncatedSeries expect(2);
  expect.add_term(Monomial(), 1);
  expect.add_term(zz(1), 1);
  expect.add_term(zz(1, 2), 1);
  expect.add_term(zz(0) * zz(1), 1);
  CHECK((s2 == expect));
}

TEST_CASE("weighted trace series at q = t equals the unweighted one") {
  const FCache fc(make_qt_point(scalar_parse("2/5"), scalar_parse("2/5")));
  const Diagram d = Diagram::shape(Partition::parse("2,1"));
  CHECK((lhs_series(d, WeightKind::w, &fc, 5) ==
         lhs_series(d, WeightKind::none, nullptr, 5)));
}
