#pragma once

#include <map>
#include <vector>

#include "qthook/diagram.hpp"
#include "qthook/partition.hpp"
#include "qthook/qtpoint.hpp"
#include "qthook/series.hpp"

namespace qthook {

// One-row Pieri coefficients. phi_plus(alpha,beta) attaches the horizontal
// strip alpha/beta, phi_minus(beta,alpha) removes it; both demand that alpha
// and beta interlace (NotAHorizontalStrip otherwise).
Scalar phi_plus(const Partition& alpha, const Partition& beta, const FCache& fc);
Scalar phi_minus(const Partition& beta, const Partition& alpha, const FCache& fc);

// A finite combination sum_lambda c_lambda(z,...) P_lambda with truncated
// series coefficients - the state vector of the half vertex operator
// calculus. Partitions with identically-zero coefficients are not stored.
class PExpansion {
 public:
  explicit PExpansion(int degree_bound) : bound_(degree_bound) {}
  static PExpansion vacuum(int degree_bound);  // 1 * P_()
  static PExpansion unit(const Partition& beta, int degree_bound);

  int degree_bound() const { return bound_; }
  const std::map<Partition, TruncatedSeries>& terms() const { return terms_; }
  TruncatedSeries coefficient(const Partition& p) const;

  void add(const Partition& p, const TruncatedSeries& c);
  void scale(const TruncatedSeries& s);
  void scale(const Scalar& c);

  // Pruning policy for the raising operator when the argument has degree 0:
  // inside an alternating word every strip later meets a degree step, so
  // strips with |beta| + s + mindeg(coeff) > D die; `word` applies that bound.
  // `by_degree` works for arguments of positive degree only (InvalidSpec
  // otherwise) and never uses the word assumption.
  enum class StripBound { by_degree, word };

  PExpansion apply_gplus(const Monomial& u, const FCache& fc, StripBound mode) const;
  // u may carry negative exponents; every surviving series term must come out
  // genuine (InvalidMonomial otherwise)
  PExpansion apply_gminus(const Monomial& u, const FCache& fc) const;
  PExpansion apply_ddeg(const Monomial& y) const;  // P_lambda -> y^{|lambda|} P_lambda

  bool operator==(const PExpansion& o) const;
  std::string str() const;
  std::string json_text() const;  // {partition: series} for debugging

 private:
  int bound_;
  std::map<Partition, TruncatedSeries> terms_;
};

// The alternating word for S(mu) inside {1..N}, applied right-to-left to the
// vacuum: returns sum_tau R_tau(z_0..z_{N-1}) P_tau truncated at D.
PExpansion operator_word_eval(const StrictPartition& mu, int N, const FCache& fc,
                              int degree_bound);

// Evaluations at a finite alphabet of monomials via the branching rule;
// a partition with more parts than arguments evaluates to 0.
TruncatedSeries eval_p(const Partition& tau, const std::vector<Monomial>& args,
                       const FCache& fc, int degree_bound);
TruncatedSeries eval_q(const Partition& tau, const std::vector<Monomial>& args,
                       const FCache& fc, int degree_bound);

}  // namespace qthook
