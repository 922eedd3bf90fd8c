#include "qthook/partition.hpp"

#include <numeric>
#include <sstream>

#include "qthook/errors.hpp"

namespace qthook {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      std::string s;
      for (int v : parts_) s += std::to_string(v) + ",";
      throw InvalidSpec("not a partition: [" + s + "]");
    }
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw InvalidSpec("empty part in partition '" + text + "'");
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw InvalidSpec("cannot parse partition '" + text + "'");
    }
  }
  if (parts.size() == 1 && parts[0] == 0) parts.clear();
  try {
    return Partition(std::move(parts));
  } catch (const InvalidSpec&) {
    throw InvalidSpec("not weakly decreasing: '" + text + "'");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= part(1); ++j) {
    int len = 0;
    while (len < length() && parts_[len] >= j) ++len;
    c.push_back(len);
  }
  return Partition(std::move(c));
}

bool Partition::is_strict() const {
  for (int i = 1; i < length(); ++i)
    if (parts_[i] >= parts_[i - 1]) return false;
  return true;
}

int Partition::odd_columns() const {
  const Partition conj = conjugate();
  int o = 0;
  for (int v : conj.parts()) o += v % 2;
  return o;
}

std::string Partition::str() const {
  std::string s = "(";
  for (int i = 0; i < length(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

StrictPartition::StrictPartition(std::vector<int> parts) : p_(std::move(parts)) {
  if (!p_.is_strict()) throw InvalidSpec("parts of " + p_.str() + " are not distinct");
}

StrictPartition::StrictPartition(Partition p) : p_(std::move(p)) {
  if (!p_.is_strict()) throw InvalidSpec("parts of " + p_.str() + " are not distinct");
}

StrictPartition StrictPartition::parse(const std::string& text) {
  return StrictPartition(Partition::parse(text));
}

bool dominated_by(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw InvalidSpec("dominance needs equal sizes");
  int sa = 0, sb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

bool interlaces(const Partition& big, const Partition& small) {
  int len = std::max(big.length(), small.length());
  for (int i = 1; i <= len; ++i) {
    if (big.part(i) < small.part(i)) return false;
    if (small.part(i) < big.part(i + 1)) return false;
  }
  return true;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(n - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> acc;
  if (n >= 0) gen_partitions(n, n, acc, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto pk = partitions_of(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

std::vector<Partition> up_strips(const Partition& beta, int strip) {
  // choose alpha_i in [beta_i, beta_{i-1}] for i >= 2, then alpha_1 takes the
  // rest; interlacing forces length(alpha) <= length(beta) + 1
  std::vector<Partition> out;
  if (strip < 0) return out;
  int lb = beta.length();
  std::vector<int> tail(lb + 2, 0);  // tail[i] = alpha_i for i >= 2
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i > lb + 1) {
      int a1 = beta.size() + strip - used;
      if (a1 < beta.part(1)) return;
      if (lb + 1 >= 2 && a1 < tail[2]) return;  // keep weakly decreasing
      std::vector<int> parts{a1};
      for (int k = 2; k <= lb + 1; ++k) parts.push_back(tail[k]);
      out.push_back(Partition(std::move(parts)));
      return;
    }
    for (int v = beta.part(i); v <= beta.part(i - 1); ++v) {
      if (used + v > strip + beta.size() - beta.part(1)) break;
      tail[i] = v;
      self(self, i + 1, used + v);
    }
    tail[i] = 0;
  };
  rec(rec, 2, 0);
  return out;
}

std::vector<Partition> down_strips(const Partition& alpha, int strip) {
  // choose beta_i in [alpha_{i+1}, alpha_i] with sum |alpha| - strip
  std::vector<Partition> out;
  if (strip < 0 || strip > alpha.size()) return out;
  int la = alpha.length();
  std::vector<int> acc(la + 1, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i > la) {
      if (left == 0) {
        std::vector<int> parts(acc.begin() + 1, acc.begin() + la + 1);
        out.push_back(Partition(std::move(parts)));
      }
      return;
    }
    for (int v = alpha.part(i + 1); v <= alpha.part(i); ++v) {
      if (v > left) break;
      acc[i] = v;
      self(self, i + 1, left - v);
    }
    acc[i] = 0;
  };
  rec(rec, 1, alpha.size() - strip);
  return out;
}

}  // namespace qthook
