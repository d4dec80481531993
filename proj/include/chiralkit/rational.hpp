#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chiralkit {

// Exact rational scalar. All polynomial coefficients live here; doubles
// appear only at evaluation boundaries.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "p/q" or a plain decimal like "0.25" into an exact rational.
Rational rat_from_string(std::string_view s);

// Canonical "p/q" with q >= 1, lowest terms ("3/1" for integers).
std::string rat_to_string(const Rational& q);

inline double rat_to_double(const Rational& q) { return q.get_d(); }

// Doubles are dyadic rationals; the conversion is exact.
inline Rational rat_from_double(double x) { return Rational(x); }

inline int rat_sign(const Rational& q) { return sgn(q); }

}  // namespace chiralkit
