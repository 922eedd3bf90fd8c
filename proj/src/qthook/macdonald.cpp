#include "qthook/macdonald.hpp"

#include <json.hpp>

#include "qthook/errors.hpp"
#include "qthook/ppartition.hpp"

namespace qthook {

namespace {

void require_strip(const Partition& alpha, const Partition& beta) {
  if (!interlaces(alpha, beta))
    throw NotAHorizontalStrip(alpha.str() + " / " + beta.str() + " is not a horizontal strip");
}

}  // namespace

Scalar phi_plus(const Partition& alpha, const Partition& beta, const FCache& fc) {
  require_strip(alpha, beta);
  Scalar v(1);
  for (int i = 1; i <= alpha.length(); ++i)
    for (int j = i; j <= alpha.length(); ++j) {
      const int d = j - i;
      v *= fc.f(alpha.part(i) - beta.part(j), d);
      v *= fc.f(beta.part(i) - alpha.part(j + 1), d);
      v /= fc.f(alpha.part(i) - alpha.part(j), d);
      v /= fc.f(beta.part(i) - beta.part(j + 1), d);
    }
  return v;
}

Scalar phi_minus(const Partition& beta, const Partition& alpha, const FCache& fc) {
  require_strip(alpha, beta);
  Scalar v(1);
  for (int i = 1; i <= alpha.length(); ++i)
    for (int j = i; j <= alpha.length(); ++j) {
      const int d = j - i;
      v *= fc.f(alpha.part(i) - beta.part(j), d);
      v *= fc.f(beta.part(i) - alpha.part(j + 1), d);
      v /= fc.f(alpha.part(i) - alpha.part(j + 1), d);
      v /= fc.f(beta.part(i) - beta.part(j), d);
    }
  return v;
}

PExpansion PExpansion::vacuum(int degree_bound) {
  return unit(Partition(), degree_bound);
}

PExpansion PExpansion::unit(const Partition& beta, int degree_bound) {
  PExpansion e(degree_bound);
  e.add(beta, TruncatedSeries::constant(degree_bound, Scalar(1)));
  return e;
}

TruncatedSeries PExpansion::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? TruncatedSeries(bound_) : it->second;
}

void PExpansion::add(const Partition& p, const TruncatedSeries& c) {
  if (c.degree_bound() != bound_)
    throw TruncationMismatch("coefficient truncation degree differs from the expansion's");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PExpansion::scale(const TruncatedSeries& s) {
  std::map<Partition, TruncatedSeries> out;
  for (auto& [p, c] : terms_) {
    TruncatedSeries v = c * s;
    if (!v.is_zero()) out.emplace(p, std::move(v));
  }
  terms_ = std::move(out);
}

void PExpansion::scale(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [p, v] : terms_) v *= c;
}

PExpansion PExpansion::apply_gplus(const Monomial& u, const FCache& fc,
                                   StripBound mode) const {
  if (!u.integral() || !u.nonnegative())
    throw InvalidMonomial("raising operator argument " + u.str() + " must be genuine");
  const int udeg2 = u.degree2();
  if (udeg2 == 0 && mode != StripBound::word)
    throw InvalidSpec("degree-0 raising argument needs the word pruning bound");
  PExpansion out(bound_);
  for (const auto& [beta, c] : terms_) {
    int smax;
    if (udeg2 > 0) {
      smax = (2 * bound_ - 2 * c.min_degree()) / udeg2;
    } else {
      smax = bound_ - c.min_degree() - beta.size();
    }
    for (int s = 0; s <= smax; ++s) {
      Monomial up = u.pow(s);
      for (const Partition& alpha : up_strips(beta, s)) {
        TruncatedSeries v = c;
        v.mul_monomial(up, phi_plus(alpha, beta, fc));
        out.add(alpha, v);
      }
    }
  }
  return out;
}

PExpansion PExpansion::apply_gminus(const Monomial& u, const FCache& fc) const {
  if (!u.integral()) throw InvalidMonomial("lowering operator argument " + u.str() +
                                           " must have integral exponents");
  PExpansion out(bound_);
  for (const auto& [alpha, c] : terms_) {
    for (int s = 0; s <= alpha.size(); ++s) {
      Monomial up = u.pow(s);
      for (const Partition& beta : down_strips(alpha, s)) {
        TruncatedSeries v = c;
        v.mul_monomial(up, phi_minus(beta, alpha, fc));
        out.add(beta, v);
      }
    }
  }
  return out;
}

PExpansion PExpansion::apply_ddeg(const Monomial& y) const {
  if (!y.integral() || !y.nonnegative())
    throw InvalidMonomial("degree operator argument " + y.str() + " must be genuine");
  PExpansion out(bound_);
  for (const auto& [p, c] : terms_) {
    TruncatedSeries v = c;
    v.mul_monomial(y.pow(p.size()));
    out.add(p, v);
  }
  return out;
}

bool PExpansion::operator==(const PExpansion& o) const {
  return bound_ == o.bound_ && terms_ == o.terms_;
}

std::string PExpansion::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    if (!s.empty()) s += "  +  ";
    s += "[" + c.str() + "] P" + p.str();
  }
  return s;
}

std::string PExpansion::json_text() const {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [p, c] : terms_)
    obj[p.str()] = nlohmann::ordered_json::parse(series_to_json_text(c));
  return obj.dump(2) + "\n";
}

PExpansion operator_word_eval(const StrictPartition& mu, int N, const FCache& fc,
                              int degree_bound) {
  auto ce = complement_and_epsilon(mu, N);
  PExpansion h = PExpansion::vacuum(degree_bound);
  for (int k = N; k >= 1; --k) {
    h = ce.epsilon[k - 1] == '+'
            ? h.apply_gplus(Monomial(), fc, PExpansion::StripBound::word)
            : h.apply_gminus(Monomial(), fc);
    h = h.apply_ddeg(Monomial::var(VarLabel::z(k - 1)));
  }
  return h;
}

namespace {

TruncatedSeries eval_p_rec(const Partition& tau, const std::vector<Monomial>& args, int n,
                           const FCache& fc, int bound,
                           std::map<std::pair<Partition, int>, TruncatedSeries>& memo) {
  if (tau.empty()) return TruncatedSeries::constant(bound, Scalar(1));
  if (n == 0) return TruncatedSeries(bound);
  auto key = std::make_pair(tau, n);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  TruncatedSeries out(bound);
  const Monomial& x = args[n - 1];
  for (int s = 0; s <= tau.size(); ++s) {
    if (s * x.degree2() > 2 * bound) break;
    Monomial xs = x.pow(s);
    for (const Partition& beta : down_strips(tau, s)) {
      TruncatedSeries v = eval_p_rec(beta, args, n - 1, fc, bound, memo);
      v.mul_monomial(xs, phi_minus(beta, tau, fc));
      out += v;
    }
  }
  memo.emplace(key, out);
  return out;
}

}  // namespace

TruncatedSeries eval_p(const Partition& tau, const std::vector<Monomial>& args,
                       const FCache& fc, int degree_bound) {
  for (const Monomial& x : args)
    if (!x.integral() || !x.nonnegative() || x.degree2() < 2)
      throw InvalidMonomial("alphabet entry " + x.str() +
                            " must be a genuine monomial of degree >= 1");
  std::map<std::pair<Partition, int>, TruncatedSeries> memo;
  return eval_p_rec(tau, args, (int)args.size(), fc, degree_bound, memo);
}

TruncatedSeries eval_q(const Partition& tau, const std::vector<Monomial>& args,
                       const FCache& fc, int degree_bound) {
  TruncatedSeries s = eval_p(tau, args, fc, degree_bound);
  s *= tau_factors(tau, fc).b;
  return s;
}

}  // namespace qthook
