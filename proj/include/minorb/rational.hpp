#pragma once

#include <gmpxx.h>
#include <string>

namespace minorb {

// Exact arbitrary-precision rationals. mpq_class keeps values canonical
// (lowest terms, positive denominator), which makes every comparison in the
// suite a strict equality. No floating point appears anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

} // namespace minorb
