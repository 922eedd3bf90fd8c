#pragma once

#include <map>
#include <utility>

#include "qthook/partition.hpp"
#include "qthook/qtpoint.hpp"

namespace qthook {

// Symmetric polynomial in a fixed number of variables, written in the
// monomial basis: partition -> coefficient of m_partition.
using MExpansion = std::map<Partition, Scalar>;

// Gram-Schmidt construction of the deformed orthogonal basis from scratch:
// power-sum inner product + monomial expansions + exact linear algebra.
// Deliberately independent of the Pieri-coefficient route so it can serve as
// its oracle. Degrees must stay <= nvars for the polynomial realization to
// be faithful (InvalidSpec otherwise).
class GramOracle {
 public:
  GramOracle(QtPoint pt, int nvars);

  int nvars() const { return nvars_; }
  const QtPoint& point() const { return fc_.point(); }

  // P_lambda in the m basis: unitriangular + orthogonality (SingularGram if
  // a pivot vanishes at this point)
  const MExpansion& p_in_m(const Partition& lambda);
  // one-row generator g_n in the m basis: sum over kappa of
  // (prod_j f(kappa_j;0)) m_kappa  -  no Pieri data involved
  MExpansion g_in_m(int n);

  Scalar inner_mm(const Partition& a, const Partition& b);
  Scalar inner(const MExpansion& a, const MExpansion& b);
  Scalar p_basis_norm(const Partition& lambda);  // <P_lambda, P_lambda>

  MExpansion m_product(const MExpansion& a, const MExpansion& b);

 private:
  using Exps = std::vector<int>;  // exponent vector of length nvars_
  const MExpansion& m_pair_product(const Partition& a, const Partition& b);
  const MExpansion& power_in_m(const Partition& rho);
  const MExpansion& m_in_p(const Partition& mu);  // m_mu in the power-sum basis
  Scalar power_norm(const Partition& rho);        // <p_rho, p_rho>
  void check_degree(int d) const;

  FCache fc_;
  int nvars_;
  std::map<std::pair<Partition, Partition>, MExpansion> mprod_;
  std::map<Partition, MExpansion> power_in_m_, m_in_p_, p_in_m_;
  std::map<std::pair<Partition, Partition>, Scalar> mm_;
  std::map<Partition, Scalar> pnorm_;
};

}  // namespace qthook
