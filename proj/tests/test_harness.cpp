#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "qthook/diagram.hpp"
#include "qthook/errors.hpp"
#include "qthook/rational.hpp"
#include "qthook/verify.hpp"

using namespace qthook;

namespace {
Monomial zz(int k, int e = 1) { return Monomial::var(VarLabel::z(k), e); }
}  // namespace

TEST_CASE("target names round trip") {
  for (const char* name : {"gansner", "main_a", "main_b", "refined", "lemma1",
                           "identities", "conjecture", "cross_checks"}) {
    CHECK(target_name(target_from_name(name)) == name);
  }
  CHECK_THROWS_AS(target_from_name("bogus"), InvalidSpec);
}

TEST_CASE("series json round trips in canonical order") {
  TruncatedSeries s(3);
  s.add_term(Monomial(), scalar_parse("1"));
  s.add_term(zz(0) * zz(1), scalar_parse("-7/3"));
  s.add_term(zz(1, 3), scalar_parse("2"));
  const std::string text = series_to_json_text(s);
  CHECK((series_from_json_text(text, 3) == s));
  CHECK(series_to_json_text(series_from_json_text(text, 3)) == text);
  CHECK_THROWS_AS(series_from_json_text("{", 3), InvalidSpec);
  CHECK_THROWS_AS(series_from_json_text(R"([{"monomial":"z0"}])", 3), InvalidSpec);
}

TEST_CASE("reports are deterministic and witness-free on pass") {
  VerificationJob job;
  job.target = Target::main_a;
  job.shape = Partition::parse("2,1");
  job.degree = 4;
  job.trials = 2;
  const Report a = run(job);
  const Report b = run(job);
  CHECK(a.pass);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.summary() == b.summary());
  CHECK(a.to_json().find("\"first_mismatch\"") == std::string::npos);
  CHECK(a.to_json().find("\"status\": \"pass\"") != std::string::npos);
  REQUIRE(a.results.size() == 2);
  CHECK(a.results[0].point.has_value());
  CHECK(a.results[0].cases == 1);
  CHECK(a.results[0].arrays > 0);
  CHECK(a.results[0].terms > 0);
  CHECK_FALSE(a.results[0].mismatch.has_value());
}

TEST_CASE("the unweighted target runs a single point-free trial") {
  VerificationJob job;
  job.target = Target::gansner;
  job.shape = Partition::parse("2,2");
  job.degree = 4;
  const Report rep = run(job);
  CHECK(rep.pass);
  REQUIRE(rep.results.size() == 1);
  CHECK_FALSE(rep.results[0].point.has_value());
  CHECK(rep.to_json().find("\"q\"") == std::string::npos);
}

TEST_CASE("a fixed evaluation point forces one trial and is echoed") {
  VerificationJob job;
  job.target = Target::main_b;
  job.shifted = StrictPartition::parse("2,1");
  job.degree = 4;
  job.qt = make_qt_point(scalar_parse("1/2"), scalar_parse("1/3"));
  const Report rep = run(job);
  CHECK(rep.pass);
  REQUIRE(rep.results.size() == 1);
  CHECK(rep.to_json().find("\"q\": \"1/2\"") != std::string::npos);
  CHECK(rep.to_json().find("\"t\": \"1/3\"") != std::string::npos);
}

TEST_CASE("flag validation rejects mismatched geometry") {
  VerificationJob job;
  job.target = Target::main_a;
  job.shifted = StrictPartition::parse("2,1");
  CHECK_THROWS_AS(run(job), InvalidSpec);

  VerificationJob two;
  two.target = Target::conjecture;
  two.tree = "(a)";
  two.dk1 = 4;
  CHECK_THROWS_AS(run(two), InvalidSpec);

  VerificationJob ident;
  ident.target = Target::identities;
  ident.shape = Partition::parse("1");
  CHECK_THROWS_AS(run(ident), InvalidSpec);

  VerificationJob qt;
  qt.target = Target::gansner;
  qt.qt = make_qt_point(scalar_parse("1/2"), scalar_parse("1/3"));
  CHECK_THROWS_AS(run(qt), InvalidSpec);

  VerificationJob bad_deg;
  bad_deg.target = Target::gansner;
  bad_deg.degree = -1;
  CHECK_THROWS_AS(run(bad_deg), InvalidSpec);
}

TEST_CASE("refined factor list for the worked complement example") {
  const StrictPartition mu = StrictPartition::parse("6,5,2");
  const ComplementEpsilon ce = complement_and_epsilon(mu, 6);
  REQUIRE((ce.complement == std::vector<int>{4, 3, 1}));
  int genuine = 0;
  for (int k : ce.complement)
    for (int l = 1; l <= mu.length(); ++l)
      if (k < mu.part(l)) ++genuine;
  CHECK(genuine == 7);
}

TEST_CASE("refined and lemma1 accept a pinned profile") {
  VerificationJob job;
  job.target = Target::refined;
  job.shifted = StrictPartition::parse("3,1");
  job.profile = Partition::parse("2");
  job.degree = 6;
  job.trials = 1;
  CHECK(run(job).pass);

  job.profile = Partition::parse("1,1,1");  // longer than the diagonal
  CHECK_THROWS_AS(run(job), InfeasibleProfile);

  VerificationJob lem;
  lem.target = Target::lemma1;
  lem.shifted = StrictPartition::parse("2");
  lem.profile = Partition::parse("2");
  lem.degree = 4;
  lem.trials = 1;
  CHECK(run(lem).pass);
}

TEST_CASE("single identity families can be run in isolation") {
  for (const char* fam : {"cauchy", "gn_genfun", "schur_littlewood", "warnaar"}) {
    VerificationJob job;
    job.target = Target::identities;
    job.identity = fam;
    job.degree = 3;
    job.trials = 1;
    const Report rep = run(job);
    CHECK(rep.pass);
    CHECK(rep.results[0].cases > 0);
  }
  VerificationJob job;
  job.target = Target::identities;
  job.identity = "nonsense";
  CHECK_THROWS_AS(run(job), InvalidSpec);
}

TEST_CASE("explicit conjecture geometries run end to end") {
  VerificationJob job;
  job.target = Target::conjecture;
  job.dk1 = 4;
  job.degree = 5;
  job.trials = 1;
  CHECK(run(job).pass);

  VerificationJob tree;
  tree.target = Target::conjecture;
  tree.tree = "(a(b)(c))";
  tree.degree = 5;
  tree.trials = 1;
  CHECK(run(tree).pass);

  VerificationJob bad;
  bad.target = Target::conjecture;
  bad.tree = "(a(b)";
  bad.trials = 1;
  CHECK_THROWS_AS(run(bad), InvalidSpec);
}

TEST_CASE("poset files load through the job plumbing") {
  const ColoredPoset p = poset_dk1(3);
  const std::string path =
      (std::filesystem::temp_directory_path() / "qthook_test_poset.json").string();
  {
    std::ofstream out(path);
    out << poset_to_json_text(p);
  }
  VerificationJob job;
  job.target = Target::conjecture;
  job.poset_file = path;
  job.degree = 5;
  job.trials = 1;
  const ColoredPoset q = poset_from_job(job);
  CHECK(poset_to_json_text(q) == poset_to_json_text(p));
  CHECK(run(job).pass);
  std::remove(path.c_str());

  job.poset_file = "/nonexistent/qthook.json";
  CHECK_THROWS_AS(run(job), InvalidSpec);
}

TEST_CASE("a perturbed coefficient flips the comparison with a true witness") {
  VerificationJob job;
  job.target = Target::gansner;
  job.shape = Partition::parse("2,2");
  job.degree = 4;
  const auto pairs = hook_case_pairs(job, nullptr);
  REQUIRE(pairs.size() == 1);
  const CasePair& c = pairs[0];

  TrialResult clean;
  compare_case(c.label, c.lhs, c.rhs, clean);
  CHECK(clean.pass);

  const Monomial target_mono = zz(0) * zz(1);  // present in 1/((1-z0z1)...)
  const Scalar original = c.rhs.coefficient(target_mono);
  TruncatedSeries rhs = c.rhs;
  rhs.add_term(target_mono, 1);
  TrialResult tr;
  compare_case(c.label, c.lhs, rhs, tr);
  CHECK_FALSE(tr.pass);
  REQUIRE(tr.mismatch.has_value());
  CHECK(tr.mismatch->where == c.label);
  CHECK(tr.mismatch->monomial == target_mono.str());
  CHECK(tr.mismatch->lhs == scalar_str(original));
  CHECK(tr.mismatch->rhs == scalar_str(original + 1));
}

TEST_CASE("default case lists have the advertised sizes") {
  VerificationJob gj;
  gj.target = Target::gansner;
  gj.degree = 2;  // small degree keeps this cheap; the list is what matters
  const auto gcases = hook_case_pairs(gj, nullptr);
  // partitions with |lambda| <= 5 and strict partitions with |mu| <= 6
  CHECK(gcases.size() == 19 + 14);

  VerificationJob bj;
  bj.target = Target::main_b;
  bj.degree = 2;
  const FCache fc(make_qt_point(scalar_parse("1/2"), scalar_parse("1/3")));
  CHECK(hook_case_pairs(bj, &fc).size() == 7);
}
