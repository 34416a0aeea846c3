#pragma once

#include <limits>
#include <string>
#include <vector>

#include "voa/core/rational.hpp"

namespace voa {

/// Truncated Laurent series  sum_k c_k t^k + O(t^P)  with exact rational
/// coefficients. P is the absolute precision; an exact (polynomial) series
/// carries P = kExact. The relative window `truncation()` is P - valuation.
///
/// Precision propagation:
///   sum      P = min(P1, P2)
///   product  relative window min(T1, T2)
///   d/dt     P - 1
/// Reading a coefficient at or beyond P raises PrecisionError.
class Series {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  /// Exact zero.
  Series() = default;
  Series(int c) : Series(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Series(const Rational& c);              // NOLINT(google-explicit-constructor)
  /// coeffs[i] is the coefficient of t^(start + i); precision is absolute.
  Series(int start, std::vector<Rational> coeffs, int precision = kExact);

  /// c * t^k, exact.
  static Series monomial(const Rational& c, int k);
  /// Zero known up to O(t^precision).
  static Series zero(int precision);
  /// Reads the JSON-style triple (valuation, truncation T, T coefficients).
  static Series from_window(int valuation, int truncation, std::vector<Rational> coeffs);

  bool exact() const { return prec_ >= kExact; }
  int precision() const { return prec_; }
  /// Lowest exponent with a nonzero coefficient; equals precision() for a zero series.
  int valuation() const { return is_zero() ? prec_ : start_; }
  /// Relative window length P - valuation (kExact for exact series).
  int truncation() const;
  /// True when every known coefficient vanishes.
  bool is_zero() const { return coeffs_.empty(); }
  /// Nonzero with valuation 0: invertible in Q[[t]].
  bool is_unit() const { return !is_zero() && start_ == 0; }

  /// Coefficient of t^k; throws PrecisionError when k >= precision().
  Rational coeff(int k) const;
  /// Dense coefficient list from valuation() up to precision() (finite only).
  std::vector<Rational> window_coeffs() const;
  /// Highest exponent stored (for exact series, the polynomial degree).
  int last_exponent() const { return start_ + static_cast<int>(coeffs_.size()) - 1; }

  Series derivative() const;
  Series inverse() const;
  /// Multiplies by t^k.
  Series shifted(int k) const;
  Series truncated(int precision) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& s);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  Series operator-() const { return *this * Rational(-1); }
  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

  /// Agreement on the common window min(P1, P2).
  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  int start_ = 0;
  std::vector<Rational> coeffs_;
  int prec_ = kExact;
};

int add_precision(int a, int b);

}  // namespace voa
