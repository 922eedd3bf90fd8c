#pragma once

#include <gmpxx.h>

#include <string>

namespace qthook {

// Exact rational scalar. mpq_class keeps values canonical (gcd-reduced,
// positive denominator); the helpers fix the external "num/den" text format.
using Scalar = mpq_class;

std::string scalar_str(const Scalar& s);

// Accepts "n" or "n/d" with optional sign; InvalidSpec on anything else.
Scalar scalar_parse(const std::string& text);

}  // namespace qthook
