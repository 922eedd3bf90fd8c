#pragma once

#include <string>

namespace qthook {

// A series variable label. Three kinds:
//   z(k)   - content-indexed variables z_k, k may be negative;
//   zprime - the primed diagonal variable z_0' of two-colored shifted shapes;
//   named  - free auxiliary variables (finite alphabets x1.., u, a, ...).
// Total order: z(k) by k, then z_0', then named labels lexicographically.
// The order is part of the serialization contract (canonical term order).
class VarLabel {
 public:
  static VarLabel z(int k);
  static VarLabel zprime();
  static VarLabel named(const std::string& name);

  bool is_z() const { return kind_ == 0; }
  bool is_zprime() const { return kind_ == 1; }
  bool is_named() const { return kind_ == 2; }
  int z_index() const;  // only for is_z()
  const std::string& name() const { return name_; }

  std::string str() const;  // "z0", "z-2", "z0'", "u"
  static VarLabel parse(const std::string& text);

  bool operator==(const VarLabel& o) const {
    return kind_ == o.kind_ && k_ == o.k_ && name_ == o.name_;
  }
  bool operator<(const VarLabel& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    if (kind_ == 0) return k_ < o.k_;
    return name_ < o.name_;
  }

 private:
  int kind_ = 0;  // 0 = z(k), 1 = zprime, 2 = named
  int k_ = 0;
  std::string name_;
};

}  // namespace qthook
