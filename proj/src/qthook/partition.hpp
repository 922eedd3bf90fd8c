#pragma once

#include <string>
#include <vector>

namespace qthook {

// Integer partition: weakly decreasing positive parts. part(i) is 1-based
// and returns 0 beyond the length, matching the zero-padding every product
// formula in this library relies on.
class Partition {
 public:
  Partition() = default;
  // accepts trailing zeros and strips them; InvalidSpec unless weakly
  // decreasing and non-negative
  explicit Partition(std::vector<int> parts);
  // "3,2,1"; empty text or "0" is the empty partition
  static Partition parse(const std::string& text);

  int length() const { return (int)parts_.size(); }
  int size() const;  // |lambda|
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  bool is_strict() const;  // strictly decreasing
  int odd_columns() const;  // number of odd parts of the conjugate
  // does the diagram of this partition contain the 1-based cell (i,j)?
  bool contains(int i, int j) const { return i >= 1 && j >= 1 && j <= part(i); }

  std::string str() const;  // "(3,2,1)", "()"

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

// Strictly decreasing positive parts; thin validated wrapper.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);
  explicit StrictPartition(Partition p);
  static StrictPartition parse(const std::string& text);

  const Partition& as_partition() const { return p_; }
  int length() const { return p_.length(); }
  int size() const { return p_.size(); }
  int part(int i) const { return p_.part(i); }
  std::string str() const { return p_.str(); }
  bool operator==(const StrictPartition& o) const { return p_ == o.p_; }

 private:
  Partition p_;
};

// dominance order on partitions of equal size: a <= b under partial sums
bool dominated_by(const Partition& a, const Partition& b);

// horizontal strip / interlacing: big_1 >= small_1 >= big_2 >= small_2 >= ...
bool interlaces(const Partition& big, const Partition& small);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);  // all |p| <= n incl. empty

// all alpha interlacing above beta with |alpha| = |beta| + strip
std::vector<Partition> up_strips(const Partition& beta, int strip);
// all beta interlacing below alpha with |alpha| - |beta| = strip
std::vector<Partition> down_strips(const Partition& alpha, int strip);

}  // namespace qthook
