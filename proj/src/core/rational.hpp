#pragma once

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace psh {

// Exact rational scalar. All linear algebra in this library is over Q with no
// floating point anywhere; tolerance is zero.
using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Accepts "p", "p/q", optional leading '-'. Canonicalizes.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) fail(Errc::parse_error, "empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      fail(Errc::parse_error, "bad rational literal '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(Errc::parse_error, "bad rational literal '" + s + "'");
  if (q.get_den() == 0) fail(Errc::parse_error, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace psh
