#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace equilib {

/// Exact rational scalar used by every geometric predicate.
using Scalar = mpq_class;

/// Parses "3", "-2.2", "16/5", "1.5e-3" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Scalar parse_scalar(std::string_view text);

/// Canonical lowest-terms form: "p" or "p/q".
std::string to_string(const Scalar& x);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Scalar& x, int digits = 12);

/// Canonical num/den; prefer this over the two-argument mpq_class constructor,
/// which does not reduce.
inline Scalar rational(long num, long den = 1) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Scalar& x) { return x.get_d(); }

inline int sign(const Scalar& x) { return sgn(x); }

/// Exact conversion of a finite double.
Scalar from_double(double x);

/// Simplest rational within `tol` of x (continued-fraction best approximation).
Scalar rationalize(const Scalar& x, const Scalar& tol);
Scalar rationalize(double x, double tol);

/// Rational approximation of pi with error below 1e-30.
const Scalar& pi_rational();

/// Platform-independent rational approximations of sin/cos (Taylor series in
/// exact arithmetic, truncated once the term drops below 1e-30).
Scalar sin_rational(const Scalar& x);
Scalar cos_rational(const Scalar& x);

/// Floor/ceil of a rational as a rational integer.
Scalar floor_q(const Scalar& x);

}  // namespace equilib
