// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <string>

#include "gfc/errors.hpp"

namespace gfc {

/// Exact rational number. mpq_class keeps the canonical form invariant
/// (gcd(|num|, den) = 1, den > 0) on every operation.
using Rational = mpq_class;

/// Parses "n/d" or "n". Throws parse_error on malformed input or d = 0.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + s);
  if (q.get_den() == 0) throw parse_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

/// Always "n/d" with d >= 1, matching the wire format.
inline std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace gfc
