#include "qthook/qtpoint.hpp"

#include <cassert>
#include <random>

#include "qthook/errors.hpp"

namespace qthook {

QtPoint make_qt_point(const Scalar& q, const Scalar& t) {
  for (const Scalar& v : {q, t})
    if (v == 0 || v == 1 || v == -1)
      throw InvalidSpec("q,t must avoid 0, 1 and -1; got q=" + scalar_str(q) +
                        " t=" + scalar_str(t));
  return QtPoint{q, t};
}

QtPoint sample_qt_point(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den(2, 20);
  std::uniform_int_distribution<int> sign(0, 1);
  auto draw = [&]() {
    int d = den(rng);
    std::uniform_int_distribution<int> num(1, d - 1);
    Scalar v(num(rng), d);
    v.canonicalize();
    return sign(rng) ? v : Scalar(-v);
  };
  Scalar q = draw(), t = draw();
  while (t == q) t = draw();
  return QtPoint{q, t};
}

const Scalar& FCache::qpow(int i) const {
  assert(i >= 0);
  if (qpow_.empty()) qpow_.push_back(Scalar(1));
  while ((int)qpow_.size() <= i) qpow_.push_back(qpow_.back() * pt_.q);
  return qpow_[i];
}

const Scalar& FCache::tpow(int m) const {
  assert(m >= 0);
  if (tpow_.empty()) tpow_.push_back(Scalar(1));
  while ((int)tpow_.size() <= m) tpow_.push_back(tpow_.back() * pt_.t);
  return tpow_[m];
}

const Scalar& FCache::f(int n, int m) const {
  assert(n >= 0 && m >= 0);
  auto it = cache_.find({n, m});
  if (it != cache_.end()) return it->second;
  Scalar v(1);
  if (n > 0) {
    // f(n;m) = f(n-1;m) * (1 - q^{n-1} t^{m+1}) / (1 - q^n t^m)
    Scalar den = Scalar(1) - qpow(n) * tpow(m);
    if (den == 0)
      throw DegenerateDenominator("1 - q^" + std::to_string(n) + " t^" + std::to_string(m) +
                                  " vanishes at q=" + scalar_str(pt_.q) +
                                  " t=" + scalar_str(pt_.t));
    v = f(n - 1, m) * (Scalar(1) - qpow(n - 1) * tpow(m + 1)) / den;
  }
  return cache_.emplace(std::make_pair(n, m), std::move(v)).first->second;
}

TruncatedSeries f_series(const Monomial& x, const FCache& fc, int degree_bound) {
  if (!x.integral() || !x.nonnegative() || x.degree2() < 2)
    throw InvalidMonomial("series argument " + x.str() +
                          " must be a genuine monomial of degree >= 1");
  TruncatedSeries s(degree_bound);
  Monomial p;
  for (int n = 0; n * x.degree2() <= 2 * degree_bound; ++n, p *= x)
    s.add_term(p, fc.f(n, 0));
  return s;
}

TruncatedSeries product_f_series(const std::vector<Monomial>& xs, const FCache& fc,
                                 int degree_bound) {
  TruncatedSeries s = TruncatedSeries::constant(degree_bound, Scalar(1));
  for (const auto& x : xs) s *= f_series(x, fc, degree_bound);
  return s;
}

}  // namespace qthook
