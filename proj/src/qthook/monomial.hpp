#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qthook/varlabel.hpp"

namespace qthook {

// A Laurent monomial in the label variables. Exponents are stored doubled
// (exp2 = twice the exponent) so the half-integer alphabet of the closed-form
// shape hooks (x_0 = y_0 = z_0^{1/2}) is exact. Factors are kept sorted by
// label with all zero exponents removed, so representation is canonical.
// Negative or fractional exponents are legal here; series admission re-checks
// integrality and sign.
class Monomial {
 public:
  Monomial() = default;  // the empty product, i.e. 1

  static Monomial var(const VarLabel& v, int exp = 1);
  static Monomial var_half(const VarLabel& v, int exp2);

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) {
    a *= b;
    return a;
  }
  Monomial inverse() const;
  Monomial pow(int e) const;

  int degree2() const;  // twice the total degree
  bool integral() const;
  bool nonnegative() const;
  bool is_one() const { return factors_.empty(); }
  int exp2_of(const VarLabel& v) const;  // 0 if absent

  const std::vector<std::pair<VarLabel, int>>& factors() const { return factors_; }

  // rename one variable (merging exponents if `to` already occurs)
  Monomial substituted(const VarLabel& from, const VarLabel& to) const;

  std::string str() const;  // "1", "z0^2*z1", "z0^(1/2)*u"

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  // canonical term order: total degree, then the factor sequence
  // lexicographically (earlier label first; on equal labels the higher
  // exponent sorts first)
  bool operator<(const Monomial& o) const;

 private:
  std::vector<std::pair<VarLabel, int>> factors_;  // sorted by label, exp2 != 0
};

}  // namespace qthook
