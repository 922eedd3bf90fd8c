#include "qthook/monomial.hpp"

#include <algorithm>

#include "qthook/errors.hpp"

namespace qthook {

Monomial Monomial::var(const VarLabel& v, int exp) { return var_half(v, 2 * exp); }

Monomial Monomial::var_half(const VarLabel& v, int exp2) {
  Monomial m;
  if (exp2 != 0) m.factors_.emplace_back(v, exp2);
  return m;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  std::vector<std::pair<VarLabel, int>> out;
  out.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.cbegin(), b = o.factors_.cbegin();
  while (a != factors_.cend() && b != o.factors_.cend()) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (b->first < a->first) {
      out.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) out.emplace_back(a->first, e);
      ++a, ++b;
    }
  }
  out.insert(out.end(), a, factors_.cend());
  out.insert(out.end(), b, o.factors_.cend());
  factors_ = std::move(out);
  return *this;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& f : m.factors_) f.second = -f.second;
  return m;
}

Monomial Monomial::pow(int e) const {
  Monomial m;
  if (e == 0) return m;
  m = *this;
  for (auto& f : m.factors_) f.second *= e;
  return m;
}

int Monomial::degree2() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

bool Monomial::integral() const {
  for (const auto& f : factors_)
    if (f.second % 2 != 0) return false;
  return true;
}

bool Monomial::nonnegative() const {
  for (const auto& f : factors_)
    if (f.second < 0) return false;
  return true;
}

int Monomial::exp2_of(const VarLabel& v) const {
  for (const auto& f : factors_)
    if (f.first == v) return f.second;
  return 0;
}

Monomial Monomial::substituted(const VarLabel& from, const VarLabel& to) const {
  int e = exp2_of(from);
  if (e == 0) return *this;
  Monomial m;
  for (const auto& f : factors_)
    if (!(f.first == from)) m.factors_.push_back(f);
  return m * var_half(to, e);
}

bool Monomial::operator<(const Monomial& o) const {
  int da = degree2(), db = o.degree2();
  if (da != db) return da < db;
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (!(a->first == b->first)) return a->first < b->first;
    if (a->second != b->second) return a->second > b->second;
    ++a, ++b;
  }
  // shorter factor list first on ties (can only happen with negative exps)
  return factors_.size() < o.factors_.size();
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e2] : factors_) {
    if (!s.empty()) s += "*";
    s += v.str();
    if (e2 == 2) continue;
    if (e2 % 2 == 0) {
      s += "^" + std::to_string(e2 / 2);
    } else {
      s += "^(" + std::to_string(e2) + "/2)";
    }
  }
  return s;
}

}  // namespace qthook
