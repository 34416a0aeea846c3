#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voa/core/mpoly.hpp"
#include "voa/lie/algebra.hpp"

namespace voa::lie {

/// Values mu(h_c) on the Cartan generators, in cartan() order.
using WeightVector = QVector;

/// Element of U(g) stored in PBW normal form: every key is a word of
/// generator indices sorted by pbw_position, zero coefficients pruned.
class PBWElement {
 public:
  using Word = std::vector<std::size_t>;

  explicit PBWElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  static PBWElement scalar(AlgebraPtr alg, const Rational& c);
  static PBWElement generator(AlgebraPtr alg, std::size_t i);
  /// Straightens an arbitrary word.
  static PBWElement word(AlgebraPtr alg, const Word& w, const Rational& coeff = 1);
  /// Parses a whitespace- or '*'-separated word of generator names ("e f", "f*f*e").
  static PBWElement parse(AlgebraPtr alg, const std::string& text);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Word& w) const;

  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(const PBWElement& a, const PBWElement& b);
  friend PBWElement operator*(const Rational& s, PBWElement a);
  friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.terms_ == b.terms_; }

  /// Weight of a homogeneous element in simple-root coordinates (nullopt for 0).
  std::optional<std::vector<int>> weight() const;

  std::string to_string() const;
  Json to_json() const;

 private:
  void add(const Word& w, const Rational& c);
  AlgebraPtr alg_;
  std::map<Word, Rational> terms_;
};

/// Generator reference carrying its algebra, for words assembled from several sources.
struct GeneratorRef {
  AlgebraPtr algebra;
  std::size_t index;
};

/// Straightening x y -> y x + [x, y] on the first out-of-order adjacent pair until normal.
PBWElement pbw_normalize(const std::vector<GeneratorRef>& word, const Rational& coeff = 1);

/// Anti-involution: e_i <-> f_i, h fixed, products reversed.
PBWElement sigma(const PBWElement& x);

/// Commutator [a, b] = ab - ba.
PBWElement commutator(const PBWElement& a, const PBWElement& b);

/// Component in U(h) = S(h) of the decomposition U(g) = U(h) + (g_- U(g) + U(g) g_+).
/// Variable c of the result is the Cartan generator cartan()[c].
MPoly hc_project(const PBWElement& x);

/// rho-shifted Harish-Chandra map: HC(z)(lambda) = pi(z)(lambda - rho).
MPoly harish_chandra(const PBWElement& z);

/// True when z commutes with every generator.
bool is_central(const PBWElement& z);

/// Quadratic Casimir sum_{a,b} dual(a,b) x_a x_b in PBW form.
PBWElement casimir(const AlgebraPtr& alg);

/// Evaluates a Cartan polynomial at a weight.
Rational evaluate_at(const MPoly& p, const WeightVector& mu);

/// Names h_c of the Cartan variables, for printing Cartan polynomials.
std::vector<std::string> cartan_names(const FiniteLieAlgebra& alg);

}  // namespace voa::lie
