#pragma once

#include <map>
#include <string>
#include <vector>

#include "voa/core/rational.hpp"

namespace voa {

/// Sparse multivariate polynomial over Q in a fixed number of commuting
/// variables. Holds Cartan-generator polynomials S(h) and the (c, h)
/// dependence of Virasoro Gram entries.
class MPoly {
 public:
  using Exponent = std::vector<int>;

  MPoly() = default;
  /// Constant polynomial; its arity grows on contact with other polynomials.
  MPoly(const Rational& constant);
  MPoly(int constant) : MPoly(Rational(constant)) {}
  MPoly(std::size_t nvars, const Rational& constant);
  static MPoly zero(std::size_t nvars);
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coeff(const Exponent& e) const;
  /// Constant term.
  Rational constant() const;
  int total_degree() const;

  /// Shorter exponents are padded with zeros; longer ones widen the ring.
  void add_term(const Exponent& e, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  MPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const MPoly& a, const MPoly& b);

  /// Substitutes values for every variable; Ring needs +, * and
  /// construction from Rational.
  template <typename Ring>
  Ring evaluate(const std::vector<Ring>& values) const {
    Ring acc(Rational(0));
    for (const auto& [e, c] : terms_) {
      Ring term(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int p = 0; p < e[i]; ++p) term = term * values[i];
      acc = acc + term;
    }
    return acc;
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void widen(std::size_t nvars);
  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

}  // namespace voa
