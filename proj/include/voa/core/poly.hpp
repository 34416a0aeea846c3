#pragma once

#include <string>
#include <vector>

#include "voa/core/rational.hpp"

namespace voa {

/// Polynomial in one indeterminate t with rational coefficients. Used as the
/// deformation ring R = Q[t] of the Jantzen construction.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);            // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly t(unsigned power = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const;
  const Rational& leading() const { return coeffs_.back(); }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Poly derivative() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder of Euclidean division; divisor must be nonzero.
  static std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den);
  /// Division known to be exact (throws DomainError otherwise).
  friend Poly exact_div(const Poly& a, const Poly& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

/// Distinct rational roots of p in increasing order (rational root theorem).
std::vector<Rational> rational_roots(const Poly& p);
/// Multiplicity of x as a root of p.
int root_multiplicity(const Poly& p, const Rational& x);

}  // namespace voa
