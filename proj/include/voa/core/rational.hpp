#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace voa {

/// Exact rational scalar. GMP keeps it canonical (positive denominator,
/// reduced fraction) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);

/// Accepts "p", "p/q", "-p/q" and decimal literals such as "0.25".
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

Rational binomial(const Rational& top, unsigned k);
Integer factorial(unsigned n);

}  // namespace voa

namespace voa {
/// n/d in canonical form (mpq_class(n, d) alone does not reduce).
inline Rational make_rational(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}
}  // namespace voa
