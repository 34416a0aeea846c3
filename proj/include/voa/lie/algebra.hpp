#pragma once

#include <memory>
#include <string>
#include <vector>

#include "voa/core/json_io.hpp"
#include "voa/core/matrix.hpp"

namespace voa::lie {

enum class GeneratorKind { Lowering, Cartan, Raising };

struct Generator {
  std::string name;
  GeneratorKind kind;
  /// Positive root in simple-root coordinates (zero vector for Cartan
  /// generators); a lowering generator has weight minus this root.
  std::vector<int> root;
};

/// Structure-constant table of a finite-dimensional Lie algebra with a
/// Chevalley-style triangular decomposition and a normalized invariant form.
/// The constructor verifies antisymmetry, the Jacobi identity on every
/// generator triple, commutativity of the Cartan part, invariance of the
/// form and compatibility of the anti-involution e_i <-> f_i.
class FiniteLieAlgebra {
 public:
  FiniteLieAlgebra(std::string name, std::vector<Generator> generators,
                   std::vector<std::vector<QVector>> brackets, QMatrix form);

  static std::shared_ptr<const FiniteLieAlgebra> sl2();
  static std::shared_ptr<const FiniteLieAlgebra> sl3();
  static std::shared_ptr<const FiniteLieAlgebra> from_json(const Json& j);
  Json to_json() const;

  const std::string& name() const { return name_; }
  std::size_t dim() const { return generators_.size(); }
  std::size_t rank() const { return cartan_.size(); }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<Generator>& generators() const { return generators_; }
  /// Index of a generator by name (DomainError when absent).
  std::size_t index_of(const std::string& name) const;
  /// Cartan generators in table order; variable i of Cartan polynomials is cartan()[i].
  const std::vector<std::size_t>& cartan() const { return cartan_; }

  /// [x_i, x_j] as coefficients over the generators.
  const QVector& bracket(std::size_t i, std::size_t j) const { return brackets_[i][j]; }
  QVector bracket(const QVector& x, const QVector& y) const;
  /// Invariant form, normalized so the highest root has squared length 2.
  const QMatrix& form() const { return form_; }
  /// Image of a generator under the anti-involution fixing the Cartan part.
  std::size_t sigma(std::size_t i) const { return sigma_[i]; }
  /// Position in the PBW order: lowering, then Cartan, then raising; table order within a block.
  std::size_t pbw_position(std::size_t i) const { return pbw_position_[i]; }

  /// alpha(h_c) for the root of generator i and Cartan generator c (ad-eigenvalue).
  Rational root_value(std::size_t i, std::size_t cartan_slot) const;
  /// rho(h_c), half the sum of positive roots evaluated on each Cartan generator.
  const QVector& rho() const { return rho_; }
  /// Dual Coxeter number, read off the Casimir eigenvalue on the adjoint representation.
  const Rational& dual_coxeter() const { return dual_coxeter_; }
  /// Matrix of ad(x_i) in the generator basis.
  QMatrix ad(std::size_t i) const;
  /// Dual basis coefficients: J_a = sum_b dual(a, b) x_b with (x_a, J_b) = delta.
  const QMatrix& dual_basis() const { return dual_; }

 private:
  void validate() const;
  std::string name_;
  std::vector<Generator> generators_;
  std::vector<std::vector<QVector>> brackets_;
  QMatrix form_;
  QMatrix dual_;
  std::vector<std::size_t> cartan_;
  std::vector<std::size_t> sigma_;
  std::vector<std::size_t> pbw_position_;
  QVector rho_;
  Rational dual_coxeter_;
};

using AlgebraPtr = std::shared_ptr<const FiniteLieAlgebra>;

}  // namespace voa::lie
