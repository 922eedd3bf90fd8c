#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qthook/rational.hpp"
#include "qthook/series.hpp"

namespace qthook {

// A rational evaluation point (q,t). Valid points avoid 0, 1 and -1 in both
// coordinates; q == t is allowed (the classical degeneration, where every
// deformation factor collapses to 1) but sample_qt_point never draws it.
struct QtPoint {
  Scalar q, t;
};

QtPoint make_qt_point(const Scalar& q, const Scalar& t);  // InvalidSpec on 0/1/-1

// Deterministic sampler: q and t are proper fractions +-num/den with
// 2 <= den <= 20, 1 <= num < den, independent random signs, resampled until
// q != t. |q|,|t| < 1 guarantees no denominator 1 - q^{i+1} t^m vanishes.
QtPoint sample_qt_point(std::uint64_t seed);

// Memoized evaluator of the deformation factor
//   f(n; m) = prod_{i=0}^{n-1} (1 - q^i t^{m+1}) / (1 - q^{i+1} t^m),
// the atom every weight, Pieri coefficient and series coefficient here is
// built from. f(0;m) = 1. Not thread-safe; use one instance per job.
class FCache {
 public:
  explicit FCache(QtPoint pt) : pt_(std::move(pt)) {}
  const QtPoint& point() const { return pt_; }

  const Scalar& f(int n, int m) const;  // n,m >= 0; DegenerateDenominator

  const Scalar& qpow(int i) const;
  const Scalar& tpow(int m) const;

 private:
  QtPoint pt_;
  mutable std::map<std::pair<int, int>, Scalar> cache_;
  mutable std::vector<Scalar> qpow_, tpow_;
};

// F(x) = (t x; q)_inf / (x; q)_inf = sum_{n>=0} f(n;0) x^n, truncated at D.
// x must be integral, non-negative, of degree >= 1.
TruncatedSeries f_series(const Monomial& x, const FCache& fc, int degree_bound);
TruncatedSeries product_f_series(const std::vector<Monomial>& xs, const FCache& fc,
                                 int degree_bound);

}  // namespace qthook
