#include "qthook/rational.hpp"

#include "qthook/errors.hpp"

namespace qthook {

std::string scalar_str(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Scalar scalar_parse(const std::string& text) {
  if (text.empty()) throw InvalidSpec("empty rational literal");
  try {
    Scalar s(text);  // mpq accepts "n" and "n/d"
    if (s.get_den() == 0) throw InvalidSpec("zero denominator in '" + text + "'");
    s.canonicalize();
    return s;
  } catch (const std::invalid_argument&) {
    throw InvalidSpec("cannot parse rational '" + text + "'");
  }
}

}  // namespace qthook
