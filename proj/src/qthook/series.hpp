#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qthook/errors.hpp"
#include "qthook/monomial.hpp"
#include "qthook/rational.hpp"

namespace qthook {

// Formal power series in the label variables truncated at total degree D:
// every operation drops terms of degree > D. Stored monomials are integral
// with non-negative exponents (InvalidMonomial otherwise); zero coefficients
// are never stored, so the term map is canonical and iteration order is the
// canonical term order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int degree_bound);
  static TruncatedSeries constant(int degree_bound, const Scalar& c);

  int degree_bound() const { return bound_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Monomial& m) const;  // 0 if absent
  // smallest total degree among stored terms (degree_bound()+1 when zero)
  int min_degree() const;

  void add_term(const Monomial& m, const Scalar& c);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Scalar& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a += b;
    return a;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    a -= b;
    return a;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) {
    a *= b;
    return a;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& c) {
    a *= c;
    return a;
  }

  // multiply by c * m where m may carry negative exponents; every surviving
  // term must come out integral and non-negative (InvalidMonomial otherwise)
  void mul_monomial(const Monomial& m, const Scalar& c = Scalar(1));

  TruncatedSeries substituted(const VarLabel& from, const VarLabel& to) const;

  bool operator==(const TruncatedSeries& o) const;

  struct Mismatch {
    Monomial monomial;
    Scalar lhs, rhs;
  };
  // first term (in canonical order) where the two series differ
  static std::optional<Mismatch> first_mismatch(const TruncatedSeries& a,
                                                const TruncatedSeries& b);

  std::string str() const;

 private:
  void check_same_bound(const TruncatedSeries& o) const;
  int bound_;
  std::map<Monomial, Scalar> terms_;
};

// 1/(1-x) truncated at D; x must be integral, non-negative, of degree >= 1.
TruncatedSeries geometric_series(const Monomial& x, int degree_bound);
TruncatedSeries product_geometric(const std::vector<Monomial>& xs, int degree_bound);

// serialization contract: JSON array of {monomial, coefficient} in canonical
// term order
std::string series_to_json_text(const TruncatedSeries& s);
TruncatedSeries series_from_json_text(const std::string& text, int degree_bound);

}  // namespace qthook
