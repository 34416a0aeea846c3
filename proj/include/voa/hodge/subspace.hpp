#pragma once

#include <vector>

#include "voa/core/json_io.hpp"
#include "voa/core/matrix.hpp"

namespace voa::hodge {

/// Rational subspace of Q^n stored by its reduced row echelon basis, so equal
/// subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<QVector>& vectors);
  static Subspace full(std::size_t ambient);
  static Subspace kernel(const QMatrix& m);
  static Subspace image(const QMatrix& m);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& o) const;
  Subspace mapped(const QMatrix& m) const;
  /// Vectors of *this completing a basis of `inner` (which must be contained).
  std::vector<QVector> complement_of(const Subspace& inner) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  Json to_json() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<QVector> basis_;
};

}  // namespace voa::hodge
