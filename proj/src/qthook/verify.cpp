#include "qthook/verify.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qthook/diagram.hpp"
#include "qthook/errors.hpp"
#include "qthook/macdonald.hpp"
#include "qthook/ppartition.hpp"

namespace qthook {

namespace {

const std::vector<std::pair<Target, std::string>>& target_table() {
  static const std::vector<std::pair<Target, std::string>> table = {
      {Target::gansner, "gansner"},       {Target::main_a, "main_a"},
      {Target::main_b, "main_b"},         {Target::refined, "refined"},
      {Target::lemma1, "lemma1"},         {Target::identities, "identities"},
      {Target::conjecture, "conjecture"}, {Target::cross_checks, "cross_checks"},
  };
  return table;
}

}  // namespace

Target target_from_name(const std::string& name) {
  for (const auto& [t, n] : target_table())
    if (n == name) return t;
  throw InvalidSpec("unknown target: " + name);
}

std::string target_name(Target t) {
  for (const auto& [tt, n] : target_table())
    if (tt == t) return n;
  throw InvalidSpec("unknown target enum value");
}

// ---------------------------------------------------------------------------
// comparison plumbing

namespace {

long long union_term_count(const TruncatedSeries& a, const TruncatedSeries& b) {
  long long n = (long long)a.terms().size();
  for (const auto& [mono, coeff] : b.terms())
    if (a.terms().find(mono) == a.terms().end()) ++n;
  return n;
}

void record_failure(TrialResult& tr, MismatchWitness w) {
  tr.pass = false;
  if (!tr.mismatch) tr.mismatch = std::move(w);
}

void compare_monomials(const std::string& label, const std::string& site,
                       const Monomial& a, const Monomial& b, TrialResult& tr) {
  ++tr.terms;
  if (!(a == b)) record_failure(tr, {label, site, a.str(), b.str()});
}

void compare_scalars(const std::string& label, const std::string& site,
                     const Scalar& a, const Scalar& b, TrialResult& tr) {
  ++tr.terms;
  if (a != b) record_failure(tr, {label, site, scalar_str(a), scalar_str(b)});
}

long long count_diagram_arrays(const Diagram& d, int budget,
                               const std::optional<Partition>& prof) {
  long long n = 0;
  enumerate_ppartitions(d, budget, prof, [&](const PPArray&) { ++n; });
  return n;
}

long long count_poset_arrays(const ColoredPoset& p, int budget) {
  long long n = 0;
  enumerate_poset_partitions(p, budget, [&](const std::vector<int>&) { ++n; });
  return n;
}

}  // namespace

void compare_case(const std::string& label, const TruncatedSeries& lhs,
                  const TruncatedSeries& rhs, TrialResult& tr) {
  ++tr.cases;
  tr.terms += union_term_count(lhs, rhs);
  if (auto mm = TruncatedSeries::first_mismatch(lhs, rhs))
    record_failure(tr, {label, mm->monomial.str(), scalar_str(mm->lhs),
                        scalar_str(mm->rhs)});
}

// ---------------------------------------------------------------------------
// job validation and geometry

namespace {

void validate_flags(const VerificationJob& job) {
  const Target t = job.target;
  auto reject = [&](bool given, const std::string& flag, bool allowed) {
    if (given && !allowed)
      throw InvalidSpec("target " + target_name(t) + " does not take " + flag);
  };
  const bool geom_shape = t == Target::gansner || t == Target::main_a ||
                          t == Target::conjecture;
  const bool geom_shifted = t == Target::gansner || t == Target::main_b ||
                            t == Target::refined || t == Target::lemma1 ||
                            t == Target::conjecture;
  reject(job.shape.has_value(), "--shape", geom_shape);
  reject(job.shifted.has_value(), "--shifted", geom_shifted);
  reject(job.tree.has_value(), "--tree", t == Target::conjecture);
  reject(job.dk1.has_value(), "--dk1", t == Target::conjecture);
  reject(job.poset_file.has_value(), "--poset", t == Target::conjecture);
  reject(job.two_color, "--two-color",
         t == Target::conjecture && job.shifted.has_value());
  reject(job.profile.has_value(), "--profile",
         t == Target::refined || t == Target::lemma1);
  reject(job.identity.has_value(), "identity restriction", t == Target::identities);
  reject(job.qt.has_value(), "--qt", t != Target::gansner);
  int geoms = (job.shape ? 1 : 0) + (job.shifted ? 1 : 0) + (job.tree ? 1 : 0) +
              (job.dk1 ? 1 : 0) + (job.poset_file ? 1 : 0);
  if (geoms > 1) throw InvalidSpec("give at most one of --shape/--shifted/--tree/--dk1/--poset");
  if (job.degree < 0) throw InvalidSpec("--deg must be >= 0");
  if (job.trials < 1) throw InvalidSpec("--trials must be >= 1");
  if (job.identity) {
    static const std::vector<std::string> families = {
        "cauchy", "gn_genfun", "schur_littlewood", "warnaar", "lemma2_commutation"};
    if (std::find(families.begin(), families.end(), *job.identity) == families.end())
      throw InvalidSpec("unknown identity family: " + *job.identity);
  }
}

std::vector<Partition> shapes_up_to(int n) { return partitions_up_to(n); }

std::vector<StrictPartition> strict_up_to(int n) {
  std::vector<StrictPartition> out;
  for (const Partition& p : partitions_up_to(n))
    if (p.is_strict()) out.push_back(StrictPartition(p));
  return out;
}

std::vector<StrictPartition> parse_mu_list(const std::vector<std::string>& texts) {
  std::vector<StrictPartition> out;
  for (const auto& s : texts) out.push_back(StrictPartition::parse(s));
  return out;
}

}  // namespace

ColoredPoset poset_from_job(const VerificationJob& job) {
  int geoms = (job.shape ? 1 : 0) + (job.shifted ? 1 : 0) + (job.tree ? 1 : 0) +
              (job.dk1 ? 1 : 0) + (job.poset_file ? 1 : 0);
  if (geoms != 1)
    throw InvalidSpec("give exactly one of --shape/--shifted/--tree/--dk1/--poset");
  if (job.shape) return poset_from_shape(*job.shape);
  if (job.shifted) return poset_from_shifted(*job.shifted, job.two_color);
  if (job.tree) return poset_from_tree(*job.tree);
  if (job.dk1) return poset_dk1(*job.dk1);
  std::ifstream in(*job.poset_file);
  if (!in) throw InvalidSpec("cannot read poset file: " + *job.poset_file);
  std::stringstream buf;
  buf << in.rdbuf();
  return poset_from_json_text(buf.str());
}

// ---------------------------------------------------------------------------
// hook-product targets (gansner / main_a / main_b)

std::vector<CasePair> hook_case_pairs(const VerificationJob& job, const FCache* fc) {
  const int D = job.degree;
  const bool weighted = job.target != Target::gansner;
  if (weighted && fc == nullptr)
    throw InvalidSpec("weighted targets need a (q,t) point");
  std::vector<CasePair> out;
  auto add = [&](const Diagram& d, const std::string& label) {
    CasePair c{label, TruncatedSeries(D), TruncatedSeries(D), 0};
    c.lhs = lhs_series(d, weighted ? WeightKind::w : WeightKind::none, fc, D);
    c.rhs = weighted ? product_f_series(d.hook_monomials(), *fc, D)
                     : product_geometric(d.hook_monomials(), D);
    c.arrays = count_diagram_arrays(d, D, std::nullopt);
    out.push_back(std::move(c));
  };
  switch (job.target) {
    case Target::gansner:
      if (job.shape) {
        add(Diagram::shape(*job.shape), "D" + job.shape->str());
      } else if (job.shifted) {
        add(Diagram::shifted(*job.shifted), "S" + job.shifted->str());
      } else {
        for (const Partition& lam : shapes_up_to(5))
          add(Diagram::shape(lam), "D" + lam.str());
        for (const StrictPartition& mu : strict_up_to(6))
          add(Diagram::shifted(mu), "S" + mu.str());
      }
      break;
    case Target::main_a:
      for (const Partition& lam :
           job.shape ? std::vector<Partition>{*job.shape} : shapes_up_to(5))
        add(Diagram::shape(lam), "lambda=" + lam.str());
      break;
    case Target::main_b: {
      std::vector<StrictPartition> mus =
          job.shifted ? std::vector<StrictPartition>{*job.shifted}
                      : parse_mu_list({"1", "2", "2,1", "3,1", "3,2", "3,2,1", "4,2,1"});
      for (const StrictPartition& mu : mus)
        add(Diagram::shifted(mu), "mu=" + mu.str());
      break;
    }
    default:
      throw InvalidSpec("hook_case_pairs only serves gansner/main_a/main_b");
  }
  return out;
}

// ---------------------------------------------------------------------------
// drivers

namespace {

void drive_hook_target(const VerificationJob& job, const FCache* fc, TrialResult& tr) {
  for (const CasePair& c : hook_case_pairs(job, fc)) {
    tr.arrays += c.arrays;
    compare_case(c.label, c.lhs, c.rhs, tr);
    if (!tr.pass) return;
  }
}

void drive_refined(const VerificationJob& job, const FCache& fc, TrialResult& tr) {
  const int D = job.degree;
  std::vector<StrictPartition> mus =
      job.shifted ? std::vector<StrictPartition>{*job.shifted}
                  : parse_mu_list({"2,1", "3,1", "3,2,1"});
  for (const StrictPartition& mu : mus) {
    const int r = mu.length();
    const int N = mu.part(1);
    const ComplementEpsilon ce = complement_and_epsilon(mu, N);
    std::vector<Monomial> fargs;
    for (int k : ce.complement)
      for (int l = 1; l <= r; ++l)
        if (k < mu.part(l)) {
          Monomial m = tilde_z(k).inverse() * tilde_z(mu.part(l));
          if (!m.integral() || !m.nonnegative())
            throw InvalidSpec("refined F-argument is not genuine");
          fargs.push_back(m);
        }
    const TruncatedSeries fprod = product_f_series(fargs, fc, D);
    std::vector<Monomial> qargs;
    for (int l = 1; l <= r; ++l) qargs.push_back(tilde_z(mu.part(l)));

    std::vector<Partition> taus;
    if (job.profile) {
      taus.push_back(*job.profile);
    } else {
      for (const Partition& tau : partitions_up_to(4))
        if (tau.length() <= r) taus.push_back(tau);
    }
    for (const Partition& tau : taus) {
      const std::string label = "mu=" + mu.str() + " tau=" + tau.str();
      const Diagram d = Diagram::shifted(mu);
      TruncatedSeries lhs(D);
      if (tau.size() <= D) {
        lhs = lhs_series(d, WeightKind::v, &fc, D, tau);
        tr.arrays += count_diagram_arrays(d, D, tau);
      }
      TruncatedSeries rhs = fprod * eval_q(tau, qargs, fc, D);
      compare_case(label, lhs, rhs, tr);
      if (!tr.pass) return;
    }
  }
}

void drive_lemma1(const VerificationJob& job, const FCache& fc, TrialResult& tr) {
  const int D = job.degree;
  const int tau_budget = std::min(6, D);
  std::vector<StrictPartition> mus =
      job.shifted ? std::vector<StrictPartition>{*job.shifted}
                  : parse_mu_list({"1", "2", "2,1", "3,1"});
  for (const StrictPartition& mu : mus) {
    const int N = mu.part(1);
    const PExpansion word = operator_word_eval(mu, N, fc, D);
    std::vector<Partition> taus;
    if (job.profile) {
      taus.push_back(*job.profile);
    } else {
      taus = partitions_up_to(tau_budget);  // all lengths: absent ones must vanish
    }
    for (const Partition& tau : taus) {
      const std::string label = "mu=" + mu.str() + " tau=" + tau.str();
      TruncatedSeries expected(D);
      if (tau.length() <= mu.length()) {
        const Diagram d = Diagram::shifted(mu);
        expected = lhs_series(d, WeightKind::v, &fc, D, tau);
        tr.arrays += count_diagram_arrays(d, D, tau);
      }
      compare_case(label, expected, word.coefficient(tau), tr);
      if (!tr.pass) return;
    }
  }
}

void compare_pexpansions(const std::string& label, const PExpansion& a,
                         const PExpansion& b, TrialResult& tr) {
  std::set<Partition> keys;
  for (const auto& [p, s] : a.terms()) keys.insert(p);
  for (const auto& [p, s] : b.terms()) keys.insert(p);
  for (const Partition& p : keys) {
    compare_case(label + " P" + p.str(), a.coefficient(p), b.coefficient(p), tr);
    if (!tr.pass) return;
  }
}

void drive_identities(const VerificationJob& job, const FCache& fc, TrialResult& tr) {
  const int D = job.degree;
  auto want = [&](const std::string& fam) {
    return !job.identity || *job.identity == fam;
  };
  auto named_vars = [&](const std::string& stem, int n) {
    std::vector<Monomial> out;
    for (int i = 1; i <= n; ++i)
      out.push_back(Monomial::var(VarLabel::named(stem + std::to_string(i))));
    return out;
  };

  if (want("cauchy")) {
    for (auto [nx, nu] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
      const std::string label =
          "cauchy " + std::to_string(nx) + "x" + std::to_string(nu);
      auto X = named_vars("x", nx);
      auto U = named_vars("u", nu);
      std::vector<Monomial> fargs;
      for (const Monomial& x : X)
        for (const Monomial& u : U) fargs.push_back(x * u);
      TruncatedSeries lhs = product_f_series(fargs, fc, D);
      TruncatedSeries rhs(D);
      for (const Partition& tau : partitions_up_to(D / 2))
        if (tau.length() <= std::min(nx, nu))
          rhs += eval_q(tau, X, fc, D) * eval_p(tau, U, fc, D);
      compare_case(label, lhs, rhs, tr);
      if (!tr.pass) return;
    }
  }

  if (want("gn_genfun")) {
    auto X = named_vars("x", 3);
    const Monomial u = Monomial::var(VarLabel::named("u"));
    std::vector<Monomial> fargs;
    for (const Monomial& x : X) fargs.push_back(x * u);
    TruncatedSeries lhs = product_f_series(fargs, fc, D);
    TruncatedSeries rhs(D);
    for (int n = 0; 2 * n <= D; ++n) {
      TruncatedSeries s = eval_q(Partition(std::vector<int>(n > 0, n)), X, fc, D);
      s.mul_monomial(u.pow(n));
      rhs += s;
    }
    compare_case("gn_genfun 3", lhs, rhs, tr);
    if (!tr.pass) return;
  }

  // Schur-Littlewood sides are also the Warnaar a=1 bit-match reference.
  std::optional<std::pair<TruncatedSeries, TruncatedSeries>> sl;
  auto schur_littlewood_sides = [&](const Monomial& amono) {
    auto X = named_vars("x", 3);
    TruncatedSeries lhs(D);
    for (const Partition& tau : partitions_up_to(D)) {
      if (tau.length() > 3) continue;
      const TauFactors tf = tau_factors(tau, fc);
      if (tf.b == 0) throw DegenerateDenominator("b_tau vanishes at this (q,t)");
      TruncatedSeries s = eval_q(tau, X, fc, D);
      s *= tf.bel / tf.b;
      s.mul_monomial(amono.pow(tf.odd_columns));
      lhs += s;
    }
    std::vector<Monomial> fargs;
    for (const Monomial& x : X) fargs.push_back(amono * x);
    for (size_t i = 0; i < X.size(); ++i)
      for (size_t j = i + 1; j < X.size(); ++j) fargs.push_back(X[i] * X[j]);
    return std::make_pair(lhs, product_f_series(fargs, fc, D));
  };

  if (want("schur_littlewood") || want("warnaar"))
    sl = schur_littlewood_sides(Monomial());

  if (want("schur_littlewood")) {
    compare_case("schur_littlewood 3", sl->first, sl->second, tr);
    if (!tr.pass) return;
  }

  if (want("warnaar")) {
    const Monomial a = Monomial::var(VarLabel::named("a"));
    auto [wl, wr] = schur_littlewood_sides(a);
    compare_case("warnaar 3 symbolic-a", wl, wr, tr);
    if (!tr.pass) return;
    // the a = 1 instance must reproduce the Schur-Littlewood series bit for bit
    auto [w1l, w1r] = schur_littlewood_sides(Monomial());
    compare_case("warnaar a=1 lhs vs schur_littlewood lhs", w1l, sl->first, tr);
    compare_case("warnaar a=1 rhs vs schur_littlewood rhs", w1r, sl->second, tr);
    if (!tr.pass) return;
  }

  if (want("lemma2_commutation")) {
    const Monomial u = Monomial::var(VarLabel::named("u"));
    const Monomial v = Monomial::var(VarLabel::named("v"));
    const Monomial w = Monomial::var(VarLabel::named("w"));
    for (const Partition& beta : partitions_up_to(3)) {
      const std::string stem = "lemma2 beta=" + beta.str();
      const PExpansion base = PExpansion::unit(beta, D);
      {
        PExpansion lhs = base.apply_gplus(u, fc, PExpansion::StripBound::by_degree)
                             .apply_ddeg(w);
        PExpansion rhs = base.apply_ddeg(w).apply_gplus(
            u * w, fc, PExpansion::StripBound::by_degree);
        compare_pexpansions(stem + " D.G+", lhs, rhs, tr);
        if (!tr.pass) return;
      }
      {
        PExpansion lhs = base.apply_gminus(u, fc).apply_ddeg(w);
        PExpansion rhs = base.apply_ddeg(w).apply_gminus(u * w.inverse(), fc);
        compare_pexpansions(stem + " D.G-", lhs, rhs, tr);
        if (!tr.pass) return;
      }
      {
        PExpansion lhs = base.apply_ddeg(w).apply_ddeg(v);
        PExpansion rhs = base.apply_ddeg(w * v);
        compare_pexpansions(stem + " D.D", lhs, rhs, tr);
        if (!tr.pass) return;
      }
      {
        PExpansion lhs = base.apply_gplus(v, fc, PExpansion::StripBound::by_degree)
                             .apply_gminus(u, fc);
        PExpansion rhs = base.apply_gminus(u, fc).apply_gplus(
            v, fc, PExpansion::StripBound::by_degree);
        rhs.scale(f_series(u * v, fc, D));
        compare_pexpansions(stem + " G-.G+", lhs, rhs, tr);
        if (!tr.pass) return;
      }
    }
  }
}

std::string random_tree_spec(std::mt19937_64& rng) {
  const int n = 1 + (int)(rng() % 7);
  std::vector<std::vector<int>> children(n);
  for (int i = 1; i < n; ++i) children[(int)(rng() % i)].push_back(i);
  std::function<std::string(int)> emit = [&](int v) {
    std::string s = "(n" + std::to_string(v);
    for (int c : children[v]) s += emit(c);
    return s + ")";
  };
  return emit(0);
}

void conjecture_case(const std::string& label, const ColoredPoset& p,
                     const FCache& fc, int D, TrialResult& tr,
                     TruncatedSeries* lhs_out = nullptr) {
  const DCompleteReport rep = check_dcomplete(p);
  if (!rep.ok) {
    record_failure(tr, {label + " check_dcomplete", "", "d-complete",
                        rep.violations.front()});
    return;
  }
  TruncatedSeries lhs = poset_lhs_series(p, fc, D);
  tr.arrays += count_poset_arrays(p, D);
  TruncatedSeries rhs = product_f_series(poset_hook_monomials(p), fc, D);
  compare_case(label, lhs, rhs, tr);
  if (lhs_out) *lhs_out = lhs;
  if (is_rooted_tree(p) && tr.pass)
    compare_case(label + " prop4-recursion", rhs, tree_series_recursive(p, fc, D), tr);
}

void drive_conjecture(const VerificationJob& job, const FCache& fc, TrialResult& tr) {
  const int D = job.degree;
  const bool explicit_poset =
      job.shape || job.shifted || job.tree || job.dk1 || job.poset_file;
  if (explicit_poset) {
    ColoredPoset p = poset_from_job(job);
    conjecture_case("poset", p, fc, D, tr);
    return;
  }
  for (int k = 3; k <= 5; ++k) {
    conjecture_case("dk1(" + std::to_string(k) + ")", poset_dk1(k), fc, D, tr);
    if (!tr.pass) return;
  }
  std::mt19937_64 rng(job.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < 20; ++i) {
    const std::string spec = random_tree_spec(rng);
    conjecture_case("tree#" + std::to_string(i) + " " + spec, poset_from_tree(spec),
                    fc, D, tr);
    if (!tr.pass) return;
  }
  for (const StrictPartition& mu : parse_mu_list({"2,1", "3,1", "3,2,1"})) {
    TruncatedSeries conj_lhs(D);
    conjecture_case("shifted mu=" + mu.str(), poset_from_shifted(mu, true), fc, D,
                    tr, &conj_lhs);
    if (!tr.pass) return;
    const TruncatedSeries main_b_rhs =
        product_f_series(Diagram::shifted(mu).hook_monomials(), fc, D);
    compare_case("shifted mu=" + mu.str() + " z0'->z0 vs main_b",
                 conj_lhs.substituted(VarLabel::zprime(), VarLabel::z(0)),
                 main_b_rhs, tr);
    if (!tr.pass) return;
  }
}

void drive_cross_checks(const VerificationJob& job, const FCache& fc, TrialResult& tr) {
  const int D = job.degree;
  for (const Partition& lam : shapes_up_to(4)) {
    if (lam.empty()) continue;
    const std::string label = "lambda=" + lam.str();
    const Diagram d = Diagram::shape(lam);
    const ColoredPoset p = poset_from_shape(lam);
    const auto cells = d.cells();
    const auto hooks_dc = poset_hook_monomials(p);
    ++tr.cases;
    for (size_t i = 0; i < cells.size(); ++i) {
      const std::string site =
          std::to_string(cells[i].i) + "," + std::to_string(cells[i].j);
      compare_monomials(label + " hook dc-vs-diagram", site, hooks_dc[i],
                        d.hook_monomial(cells[i]), tr);
      compare_monomials(label + " hook closed-vs-diagram", site,
                        closed_hook_shape(lam, cells[i]), d.hook_monomial(cells[i]),
                        tr);
      if (!tr.pass) return;
    }
    enumerate_ppartitions(d, D, std::nullopt, [&](const PPArray& a) {
      if (!tr.pass) return;
      ++tr.arrays;
      std::vector<int> sigma;
      for (const Cell& c : cells) sigma.push_back(a.entry(c.i, c.j));
      compare_scalars(label + " weight wp-vs-shape", a.str(),
                      weight_wp(p, sigma, fc), weight_shape(a, fc), tr);
    });
    if (!tr.pass) return;
  }
  for (const StrictPartition& mu : strict_up_to(5)) {
    if (mu.length() == 0) continue;
    const std::string label = "mu=" + mu.str();
    const Diagram d = Diagram::shifted(mu);
    const ColoredPoset p = poset_from_shifted(mu, true);
    const auto cells = d.cells();
    const auto hooks_dc = poset_hook_monomials(p);
    ++tr.cases;
    for (size_t i = 0; i < cells.size(); ++i) {
      const std::string site =
          std::to_string(cells[i].i) + "," + std::to_string(cells[i].j);
      compare_monomials(label + " hook dc-vs-diagram", site,
                        hooks_dc[i].substituted(VarLabel::zprime(), VarLabel::z(0)),
                        d.hook_monomial(cells[i]), tr);
      compare_monomials(label + " hook closed-vs-diagram", site,
                        closed_hook_shifted(mu, mu.part(1), cells[i]),
                        d.hook_monomial(cells[i]), tr);
      if (!tr.pass) return;
    }
    enumerate_ppartitions(d, D, std::nullopt, [&](const PPArray& a) {
      if (!tr.pass) return;
      ++tr.arrays;
      std::vector<int> sigma;
      for (const Cell& c : cells) sigma.push_back(a.entry(c.i, c.j));
      compare_scalars(label + " weight wp-vs-shifted", a.str(),
                      weight_wp(p, sigma, fc), weight_shifted(a, fc), tr);
    });
    if (!tr.pass) return;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// run + report

Report run(const VerificationJob& job) {
  validate_flags(job);
  Report rep;
  rep.target = target_name(job.target);
  rep.degree = job.degree;
  rep.seed = job.seed;
  const bool unweighted = job.target == Target::gansner;
  const int ntrials = unweighted ? 1 : (job.qt ? 1 : job.trials);
  rep.trials = ntrials;
  for (int i = 0; i < ntrials; ++i) {
    TrialResult tr;
    if (unweighted) {
      drive_hook_target(job, nullptr, tr);
    } else {
      const QtPoint pt = job.qt ? *job.qt : sample_qt_point(job.seed + (std::uint64_t)i);
      tr.point = pt;
      FCache fc(pt);
      switch (job.target) {
        case Target::main_a:
        case Target::main_b:
          drive_hook_target(job, &fc, tr);
          break;
        case Target::refined:
          drive_refined(job, fc, tr);
          break;
        case Target::lemma1:
          drive_lemma1(job, fc, tr);
          break;
        case Target::identities:
          drive_identities(job, fc, tr);
          break;
        case Target::conjecture:
          drive_conjecture(job, fc, tr);
          break;
        case Target::cross_checks:
          drive_cross_checks(job, fc, tr);
          break;
        case Target::gansner:
          break;  // handled above
      }
    }
    rep.pass = rep.pass && tr.pass;
    rep.results.push_back(std::move(tr));
  }
  return rep;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["target"] = target;
  j["degree"] = degree;
  j["trials"] = trials;
  j["seed"] = seed;
  j["status"] = pass ? "pass" : "fail";
  j["results"] = nlohmann::ordered_json::array();
  for (const TrialResult& r : results) {
    nlohmann::ordered_json t;
    if (r.point) {
      t["q"] = scalar_str(r.point->q);
      t["t"] = scalar_str(r.point->t);
    }
    t["status"] = r.pass ? "pass" : "fail";
    t["cases"] = r.cases;
    t["arrays"] = r.arrays;
    t["terms"] = r.terms;
    if (r.mismatch) {
      nlohmann::ordered_json m;
      m["case"] = r.mismatch->where;
      m["monomial"] = r.mismatch->monomial;
      m["lhs"] = r.mismatch->lhs;
      m["rhs"] = r.mismatch->rhs;
      t["first_mismatch"] = m;
    }
    j["results"].push_back(t);
  }
  return j.dump(2) + "\n";
}

std::string Report::summary() const {
  std::ostringstream out;
  out << "target=" << target << " degree=" << degree << " seed=" << seed
      << " status=" << (pass ? "pass" : "fail") << "\n";
  for (size_t i = 0; i < results.size(); ++i) {
    const TrialResult& r = results[i];
    out << "  trial " << (i + 1) << ":";
    if (r.point)
      out << " q=" << scalar_str(r.point->q) << " t=" << scalar_str(r.point->t);
    out << (r.pass ? " pass" : " FAIL") << " cases=" << r.cases
        << " arrays=" << r.arrays << " terms=" << r.terms << "\n";
    if (r.mismatch)
      out << "    at " << r.mismatch->where << ", coefficient of "
          << r.mismatch->monomial << ": lhs=" << r.mismatch->lhs
          << " rhs=" << r.mismatch->rhs << "\n";
  }
  return out.str();
}

}  // namespace qthook
