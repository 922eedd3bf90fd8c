#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qthook/partition.hpp"
#include "qthook/poset.hpp"
#include "qthook/qtpoint.hpp"
#include "qthook/series.hpp"

namespace qthook {

enum class Target {
  gansner,
  main_a,
  main_b,
  refined,
  lemma1,
  identities,
  conjecture,
  cross_checks,
};

Target target_from_name(const std::string& name);  // InvalidSpec on unknown
std::string target_name(Target t);

struct VerificationJob {
  Target target = Target::gansner;
  // geometry (defaults to the target's built-in case list when absent)
  std::optional<Partition> shape;
  std::optional<StrictPartition> shifted;
  bool two_color = false;
  std::optional<std::string> tree;
  std::optional<int> dk1;
  std::optional<std::string> poset_file;
  std::optional<Partition> profile;    // restrict refined / lemma1 to one tau
  std::optional<std::string> identity; // restrict identities to one family
  int degree = 6;
  int trials = 3;
  std::uint64_t seed = 1;
  std::optional<QtPoint> qt;  // fixed evaluation point; forces a single trial
};

struct MismatchWitness {
  std::string where;     // sub-case label
  std::string monomial;  // canonical monomial (or comparison site) text
  std::string lhs, rhs;
};

struct TrialResult {
  std::optional<QtPoint> point;  // absent for the unweighted target
  bool pass = true;
  std::optional<MismatchWitness> mismatch;  // first failure; later cases skipped
  long long cases = 0;   // sub-comparisons run
  long long arrays = 0;  // LHS objects enumerated
  long long terms = 0;   // series terms / scalar values compared
};

struct Report {
  std::string target;
  int degree = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool pass = true;
  std::vector<TrialResult> results;

  std::string to_json() const;  // deterministic: no clocks, no addresses
  std::string summary() const;  // human-readable, one line per trial
};

// Runs every sub-case of the target (or the single case the job pins down)
// at `trials` sampled points. Math failures become fail reports; malformed
// configuration throws.
Report run(const VerificationJob& job);

// The enumeration-vs-hook-product series pairs behind the gansner / main_a /
// main_b targets, exposed so fault-injection tests can perturb one RHS
// coefficient and watch the comparison flip. fc may be null for gansner.
struct CasePair {
  std::string label;
  TruncatedSeries lhs, rhs;
  long long arrays = 0;
};
std::vector<CasePair> hook_case_pairs(const VerificationJob& job, const FCache* fc);

// one comparison step of run(): updates counts, records the first witness
void compare_case(const std::string& label, const TruncatedSeries& lhs,
                  const TruncatedSeries& rhs, TrialResult& tr);

// poset selected by the job's flags (exactly one of shape / shifted / tree /
// dk1 / poset file)
ColoredPoset poset_from_job(const VerificationJob& job);

}  // namespace qthook
