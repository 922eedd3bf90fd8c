#include "qthook/gram.hpp"

#include <algorithm>

#include "qthook/errors.hpp"

namespace qthook {

namespace {

// all distinct arrangements of the parts of mu padded to n slots
std::vector<std::vector<int>> arrangements(const Partition& mu, int n) {
  std::vector<int> v(n, 0);
  for (int i = 0; i < mu.length(); ++i) v[i] = mu.parts()[i];
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Scalar factorial(int n) {
  Scalar v(1);
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

// z_rho = prod_i i^{mult_i} mult_i!
Scalar z_factor(const Partition& rho) {
  Scalar v(1);
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  for (auto [part, m] : mult) {
    for (int k = 0; k < m; ++k) v *= part;
    v *= factorial(m);
  }
  return v;
}

}  // namespace

GramOracle::GramOracle(QtPoint pt, int nvars) : fc_(std::move(pt)), nvars_(nvars) {
  if (nvars < 1) throw InvalidSpec("GramOracle needs at least one variable");
}

void GramOracle::check_degree(int d) const {
  if (d > nvars_)
    throw InvalidSpec("degree " + std::to_string(d) + " exceeds the " +
                      std::to_string(nvars_) + "-variable faithful range");
}

const MExpansion& GramOracle::m_pair_product(const Partition& a, const Partition& b) {
  auto key = std::make_pair(a, b);
  auto it = mprod_.find(key);
  if (it != mprod_.end()) return it->second;
  MExpansion out;
  if (a.length() <= nvars_ && b.length() <= nvars_) {
    std::map<std::vector<int>, Scalar> full;
    for (const auto& pa : arrangements(a, nvars_))
      for (const auto& pb : arrangements(b, nvars_)) {
        std::vector<int> sum(nvars_);
        for (int i = 0; i < nvars_; ++i) sum[i] = pa[i] + pb[i];
        full[std::move(sum)] += 1;
      }
    for (const auto& [vec, c] : full) {
      if (std::is_sorted(vec.begin(), vec.end(), std::greater<int>()))
        out.emplace(Partition(vec), c);
    }
  }
  return mprod_.emplace(std::move(key), std::move(out)).first->second;
}

MExpansion GramOracle::m_product(const MExpansion& a, const MExpansion& b) {
  MExpansion out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b)
      for (const auto& [p, c] : m_pair_product(pa, pb)) {
        Scalar& v = out[p];
        v += ca * cb * c;
        if (v == 0) out.erase(p);
      }
  return out;
}

const MExpansion& GramOracle::power_in_m(const Partition& rho) {
  auto it = power_in_m_.find(rho);
  if (it != power_in_m_.end()) return it->second;
  MExpansion out;
  if (rho.empty()) {
    out.emplace(Partition(), Scalar(1));
  } else {
    MExpansion head{{Partition({rho.part(1)}), Scalar(1)}};
    std::vector<int> rest(rho.parts().begin() + 1, rho.parts().end());
    out = m_product(head, power_in_m(Partition(rest)));
  }
  return power_in_m_.emplace(rho, std::move(out)).first->second;
}

const MExpansion& GramOracle::m_in_p(const Partition& mu) {
  auto it = m_in_p_.find(mu);
  if (it != m_in_p_.end()) return it->second;
  const int d = mu.size();
  check_degree(d);
  // invert the degree-d change of basis p_rho = sum_nu A[rho][nu] m_nu
  std::vector<Partition> parts = partitions_of(d);
  const int n = (int)parts.size();
  std::map<Partition, int> index;
  for (int i = 0; i < n; ++i) index[parts[i]] = i;
  std::vector<std::vector<Scalar>> aug(n, std::vector<Scalar>(2 * n, Scalar(0)));
  for (int i = 0; i < n; ++i) {
    for (const auto& [nu, c] : power_in_m(parts[i])) aug[i][index.at(nu)] = c;
    aug[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {  // exact Gauss-Jordan
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (aug[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) throw SingularGram("power-sum basis change is singular");
    std::swap(aug[col], aug[piv]);
    Scalar inv = Scalar(1) / aug[col][col];
    for (int k = col; k < 2 * n; ++k) aug[col][k] *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || aug[row][col] == 0) continue;
      Scalar factor = aug[row][col];
      for (int k = col; k < 2 * n; ++k) aug[row][k] -= factor * aug[col][k];
    }
  }
  // with p_rho = sum_nu A[rho][nu] m_nu, the inverse gives
  // m_{parts[i]} = sum_rho A^{-1}[i][rho] p_{parts[rho]}
  for (int i = 0; i < n; ++i) {
    MExpansion out;
    for (int rho = 0; rho < n; ++rho)
      if (aug[i][n + rho] != 0) out.emplace(parts[rho], aug[i][n + rho]);
    m_in_p_.emplace(parts[i], std::move(out));
  }
  return m_in_p_.at(mu);
}

Scalar GramOracle::power_norm(const Partition& rho) {
  auto it = pnorm_.find(rho);
  if (it != pnorm_.end()) return it->second;
  Scalar v = z_factor(rho);
  for (int p : rho.parts()) {
    Scalar den = Scalar(1) - fc_.tpow(p);
    if (den == 0) throw DegenerateDenominator("1 - t^" + std::to_string(p) + " vanishes");
    v *= (Scalar(1) - fc_.qpow(p)) / den;
  }
  return pnorm_.emplace(rho, std::move(v)).first->second;
}

Scalar GramOracle::inner_mm(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return Scalar(0);
  auto key = std::make_pair(std::min(a, b), std::max(a, b));
  auto it = mm_.find(key);
  if (it != mm_.end()) return it->second;
  const MExpansion& ea = m_in_p(a);
  const MExpansion& eb = m_in_p(b);
  Scalar v(0);
  for (const auto& [rho, ca] : ea) {
    auto jt = eb.find(rho);
    if (jt != eb.end()) v += ca * jt->second * power_norm(rho);
  }
  return mm_.emplace(std::move(key), std::move(v)).first->second;
}

Scalar GramOracle::inner(const MExpansion& a, const MExpansion& b) {
  Scalar v(0);
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      if (pa.size() != pb.size()) continue;
      v += ca * cb * inner_mm(pa, pb);
    }
  return v;
}

const MExpansion& GramOracle::p_in_m(const Partition& lambda) {
  auto it = p_in_m_.find(lambda);
  if (it != p_in_m_.end()) return it->second;
  check_degree(lambda.size());
  // unknowns: coefficients on the strictly dominated partitions
  std::vector<Partition> lower;
  for (const Partition& mu : partitions_of(lambda.size()))
    if (!(mu == lambda) && dominated_by(mu, lambda)) lower.push_back(mu);
  const int n = (int)lower.size();
  std::vector<std::vector<Scalar>> aug(n, std::vector<Scalar>(n + 1, Scalar(0)));
  for (int row = 0; row < n; ++row) {  // orthogonality against each m_nu, nu < lambda
    for (int col = 0; col < n; ++col) aug[row][col] = inner_mm(lower[col], lower[row]);
    aug[row][n] = -inner_mm(lambda, lower[row]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (aug[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0)
      throw SingularGram("Gram matrix below " + lambda.str() + " is singular at this point");
    std::swap(aug[col], aug[piv]);
    Scalar inv = Scalar(1) / aug[col][col];
    for (int k = col; k <= n; ++k) aug[col][k] *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || aug[row][col] == 0) continue;
      Scalar factor = aug[row][col];
      for (int k = col; k <= n; ++k) aug[row][k] -= factor * aug[col][k];
    }
  }
  MExpansion out{{lambda, Scalar(1)}};
  for (int i = 0; i < n; ++i)
    if (aug[i][n] != 0) out.emplace(lower[i], aug[i][n]);
  return p_in_m_.emplace(lambda, std::move(out)).first->second;
}

MExpansion GramOracle::g_in_m(int n) {
  check_degree(n);
  MExpansion out;
  for (const Partition& kappa : partitions_of(n)) {
    if (kappa.length() > nvars_) continue;
    Scalar c(1);
    for (int part : kappa.parts()) c *= fc_.f(part, 0);
    out.emplace(kappa, std::move(c));
  }
  return out;
}

Scalar GramOracle::p_basis_norm(const Partition& lambda) {
  const MExpansion& e = p_in_m(lambda);
  return inner(e, e);
}

}  // namespace qthook
