#include "qthook/varlabel.hpp"

#include <cstdlib>

#include "qthook/errors.hpp"

namespace qthook {

namespace {

// does the text collide with the reserved z-label syntax z<int> / z0' ?
bool looks_like_z(const std::string& s) {
  if (s.size() < 2 || s[0] != 'z') return false;
  std::size_t end = s.size();
  if (s.back() == '\'') --end;
  if (end < 2) return false;
  std::size_t i = 1;
  if (s[i] == '-') ++i;
  if (i >= end) return false;
  for (; i < end; ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

VarLabel VarLabel::z(int k) {
  VarLabel v;
  v.kind_ = 0;
  v.k_ = k;
  return v;
}

VarLabel VarLabel::zprime() {
  VarLabel v;
  v.kind_ = 1;
  return v;
}

VarLabel VarLabel::named(const std::string& name) {
  if (name.empty()) throw InvalidSpec("empty variable name");
  if (looks_like_z(name))
    throw InvalidSpec("variable name '" + name + "' collides with z-label syntax");
  VarLabel v;
  v.kind_ = 2;
  v.name_ = name;
  return v;
}

int VarLabel::z_index() const {
  if (kind_ != 0) throw InvalidSpec("z_index() on a non-z label");
  return k_;
}

std::string VarLabel::str() const {
  switch (kind_) {
    case 0: return "z" + std::to_string(k_);
    case 1: return "z0'";
    default: return name_;
  }
}

VarLabel VarLabel::parse(const std::string& text) {
  if (text == "z0'") return zprime();
  if (looks_like_z(text)) return z(std::atoi(text.c_str() + 1));
  return named(text);
}

}  // namespace qthook
