#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "voa/fock/graded_field.hpp"
#include "voa/lie/algebra.hpp"

namespace voa::fock {

using lie::AlgebraPtr;

/// sum x_a (x) t^n plus a multiple of K, over a finite Lie algebra table.
struct AffineElement {
  AlgebraPtr algebra;
  /// (generator index, power of t) -> coefficient
  std::map<std::pair<std::size_t, int>, Rational> terms;
  Rational central = 0;

  static AffineElement loop(AlgebraPtr alg, std::size_t gen, int n, const Rational& c = 1);
  static AffineElement K(AlgebraPtr alg, const Rational& c = 1);

  bool is_zero() const { return terms.empty() && voa::is_zero(central); }
  AffineElement& operator+=(const AffineElement& o);
  friend AffineElement operator+(AffineElement a, const AffineElement& b) { return a += b; }
  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.terms == b.terms && a.central == b.central;
  }
  std::string to_string() const;
  Json to_json() const;
};

/// [x t^m, y t^n] = [x, y] t^{m+n} + m delta_{m+n,0} (x, y) K; K central.
AffineElement affine_bracket(const AffineElement& x, const AffineElement& y);

/// J^a_n with n <= -1; a monomial is sorted by (mode, generator index) ascending.
struct CurrentMode {
  int mode;
  std::size_t gen;
  friend auto operator<=>(const CurrentMode&, const CurrentMode&) = default;
};
using VacuumMonomial = std::vector<CurrentMode>;
using VacuumVector = std::map<VacuumMonomial, Rational>;

/// Vacuum module V_k(g): g[[t]] kills the vacuum and K acts by k.
class VacuumModule {
 public:
  VacuumModule(AlgebraPtr alg, Rational level);

  const AlgebraPtr& algebra() const { return alg_; }
  const Rational& level() const { return k_; }
  bool critical() const;

  /// Monomials of degree d, sorted by the monomial order.
  const std::vector<VacuumMonomial>& basis(int degree) const;
  std::size_t dim(int degree) const { return degree < 0 ? 0 : basis(degree).size(); }

  /// J^a_n applied to a vector.
  VacuumVector act(std::size_t a, int n, const VacuumVector& v) const;
  QMatrix mode_matrix(std::size_t a, int n, int degree) const;

  /// Raw Sugawara mode S_n = 1/2 sum_a sum_j :J^a_j J_{a,n-j}: (J_a the dual basis) from degree d.
  QMatrix sugawara_raw(int n, int degree) const;
  /// L_n = S_n / (k + h^vee); CriticalLevelError at k = -h^vee.
  QMatrix sugawara(int n, int degree) const;

  /// Y(J^a_{-1} 1, z) = sum_n J^a_n z^{-n-1}.
  GradedField current_field(std::size_t a) const;

  QVector coordinates(const VacuumVector& v, int degree) const;
  std::string to_string(const VacuumMonomial& m) const;

 private:
  struct State;
  const VacuumVector& act_basis(std::size_t a, int n, const VacuumMonomial& m) const;
  QMatrix matrix_of(const std::function<VacuumVector(const VacuumVector&)>& op, int from, int to) const;
  AlgebraPtr alg_;
  Rational k_;
  std::shared_ptr<State> state_;
};

struct SugawaraReport {
  bool passed = true;
  /// Central charge measured from [L_n, L_{-n}], when some such pair was checked.
  std::optional<Rational> central_charge;
  std::optional<std::string> witness;
  int checks = 0;
  Json to_json() const;
};

/// Tests [L_n, L_m] = (n - m) L_{n+m} + (n^3 - n)/12 delta_{n,-m} c Id on degrees <= degree_cap for
/// |n|, |m| <= mode_cap. Inconsistent values of c raise TruncationTooSmallError.
SugawaraReport check_virasoro_of_sugawara(const VacuumModule& v, int mode_cap, int degree_cap);

/// [S_n, J^a_m] = 0 for |n|, |m| <= mode_cap on degrees <= degree_cap; the witness names the first failure.
AxiomReport check_sugawara_centrality(const VacuumModule& v, int mode_cap, int degree_cap);

}  // namespace voa::fock
