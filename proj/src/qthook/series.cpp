#include "qthook/series.hpp"

#include <json.hpp>

namespace qthook {

TruncatedSeries::TruncatedSeries(int degree_bound) : bound_(degree_bound) {
  if (degree_bound < 0) throw InvalidSpec("negative truncation degree");
}

TruncatedSeries TruncatedSeries::constant(int degree_bound, const Scalar& c) {
  TruncatedSeries s(degree_bound);
  s.add_term(Monomial(), c);
  return s;
}

Scalar TruncatedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int TruncatedSeries::min_degree() const {
  if (terms_.empty()) return bound_ + 1;
  return terms_.begin()->first.degree2() / 2;  // map order is degree-first
}

void TruncatedSeries::add_term(const Monomial& m, const Scalar& c) {
  if (!m.integral() || !m.nonnegative())
    throw InvalidMonomial("series term " + m.str() + " is not a genuine monomial");
  if (c == 0) return;
  if (m.degree2() > 2 * bound_) return;  // truncation
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedSeries::check_same_bound(const TruncatedSeries& o) const {
  if (bound_ != o.bound_)
    throw TruncationMismatch("series truncated at degree " + std::to_string(bound_) +
                             " combined with degree " + std::to_string(o.bound_));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_same_bound(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_same_bound(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  check_same_bound(o);
  TruncatedSeries out(bound_);
  for (const auto& [ma, ca] : terms_) {
    int da = ma.degree2();
    for (const auto& [mb, cb] : o.terms_) {
      if (da + mb.degree2() > 2 * bound_) break;  // map order is degree-first
      out.add_term(ma * mb, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

void TruncatedSeries::mul_monomial(const Monomial& m, const Scalar& c) {
  TruncatedSeries out(bound_);
  if (c != 0)
    for (const auto& [mm, cc] : terms_) out.add_term(mm * m, cc * c);
  terms_ = std::move(out.terms_);
}

TruncatedSeries TruncatedSeries::substituted(const VarLabel& from, const VarLabel& to) const {
  TruncatedSeries out(bound_);
  for (const auto& [m, c] : terms_) out.add_term(m.substituted(from, to), c);
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  check_same_bound(o);
  return terms_ == o.terms_;
}

std::optional<TruncatedSeries::Mismatch> TruncatedSeries::first_mismatch(
    const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_same_bound(b);
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      return Mismatch{ia->first, ia->second, Scalar(0)};
    }
    if (ia == a.terms_.end() || ib->first < ia->first) {
      return Mismatch{ib->first, Scalar(0), ib->second};
    }
    if (ia->second != ib->second) return Mismatch{ia->first, ia->second, ib->second};
    ++ia, ++ib;
  }
  return std::nullopt;
}

std::string TruncatedSeries::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += scalar_str(c);
    if (!m.is_one()) s += "*" + m.str();
  }
  return s;
}

TruncatedSeries geometric_series(const Monomial& x, int degree_bound) {
  if (!x.integral() || !x.nonnegative() || x.degree2() < 2)
    throw InvalidMonomial("geometric series argument " + x.str() +
                          " must be a genuine monomial of degree >= 1");
  TruncatedSeries s(degree_bound);
  Monomial p;
  for (int n = 0; n * x.degree2() <= 2 * degree_bound; ++n, p *= x) s.add_term(p, Scalar(1));
  return s;
}

TruncatedSeries product_geometric(const std::vector<Monomial>& xs, int degree_bound) {
  TruncatedSeries s = TruncatedSeries::constant(degree_bound, Scalar(1));
  for (const auto& x : xs) s *= geometric_series(x, degree_bound);
  return s;
}

std::string series_to_json_text(const TruncatedSeries& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [mono, coeff] : s.terms()) {
    nlohmann::ordered_json term;
    term["monomial"] = mono.str();
    term["coefficient"] = scalar_str(coeff);
    arr.push_back(term);
  }
  return arr.dump(2) + "\n";
}

namespace {

Monomial parse_monomial_text(const std::string& text) {
  if (text.empty()) throw InvalidSpec("empty monomial text");
  if (text == "1") return Monomial();
  Monomial out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t star = text.find('*', pos);
    std::string factor =
        text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    pos = star == std::string::npos ? text.size() : star + 1;
    size_t caret = factor.find('^');
    std::string label = factor.substr(0, caret);
    int exp = 1;
    if (caret != std::string::npos) {
      std::string etext = factor.substr(caret + 1);
      try {
        size_t used = 0;
        exp = std::stoi(etext, &used);
        if (used != etext.size()) throw std::invalid_argument(etext);
      } catch (const std::exception&) {
        throw InvalidSpec("bad exponent in monomial: " + factor);
      }
    }
    out *= Monomial::var(VarLabel::parse(label), exp);
  }
  return out;
}

}  // namespace

TruncatedSeries series_from_json_text(const std::string& text, int degree_bound) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("series text is not valid JSON: ") + e.what());
  }
  if (!arr.is_array()) throw InvalidSpec("series JSON must be an array");
  TruncatedSeries s(degree_bound);
  for (const auto& term : arr) {
    if (!term.is_object() || !term.contains("monomial") || !term.contains("coefficient"))
      throw InvalidSpec("series term needs monomial and coefficient");
    s.add_term(parse_monomial_text(term["monomial"].get<std::string>()),
               scalar_parse(term["coefficient"].get<std::string>()));
  }
  return s;
}

}  // namespace qthook
