#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "randotop/errors.hpp"

namespace randotop {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p"; the result is canonical (reduced, positive denominator).
inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw domain_error("not a rational: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw domain_error("zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational clamp01(const Rational& q) {
  if (q < 0) return Rational(0);
  if (q > 1) return Rational(1);
  return q;
}

inline bool in_unit(const Rational& q) { return q >= 0 && q <= 1; }

inline void require_unit(const Rational& q, const char* what) {
  if (!in_unit(q)) throw domain_error(std::string(what) + " = " + q.get_str() + " outside [0,1]");
}

}  // namespace randotop
