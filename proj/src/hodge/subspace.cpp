#include "voa/hodge/subspace.hpp"

#include "voa/core/errors.hpp"
#include "voa/core/linalg.hpp"

namespace voa::hodge {

Subspace Subspace::span(std::size_t ambient, const std::vector<QVector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  QMatrix m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw ShapeError("vector does not live in the ambient space");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
  }
  RowEchelon e = row_echelon(std::move(m));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.basis_.push_back(e.reduced.row(i));
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<QVector> vs;
  for (std::size_t i = 0; i < ambient; ++i) {
    QVector v(ambient, 0);
    v[i] = 1;
    vs.push_back(std::move(v));
  }
  return span(ambient, vs);
}

Subspace Subspace::kernel(const QMatrix& m) { return span(m.cols(), kernel_basis(m)); }

Subspace Subspace::image(const QMatrix& m) {
  std::vector<QVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return span(m.rows(), cols);
}

bool Subspace::contains(const QVector& v) const {
  std::vector<QVector> vs = basis_;
  vs.push_back(v);
  return span(ambient_, vs).dim() == dim();
}

bool Subspace::contains(const Subspace& o) const { return (*this + o).dim() == dim(); }

Subspace Subspace::mapped(const QMatrix& m) const {
  std::vector<QVector> vs;
  for (const auto& v : basis_) vs.push_back(m * v);
  return span(m.rows(), vs);
}

std::vector<QVector> Subspace::complement_of(const Subspace& inner) const {
  if (!contains(inner)) throw DomainError("complement of a subspace that is not contained");
  std::vector<QVector> current = inner.basis_, out;
  for (const auto& v : basis_) {
    std::vector<QVector> trial = current;
    trial.push_back(v);
    if (span(ambient_, trial).dim() > current.size()) {
      current.push_back(v);
      out.push_back(v);
    }
  }
  return out;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw ShapeError("subspaces of different spaces");
  std::vector<QVector> vs = a.basis_;
  vs.insert(vs.end(), b.basis_.begin(), b.basis_.end());
  return Subspace::span(a.ambient_, vs);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw ShapeError("subspaces of different spaces");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
  // sum x_i a_i = sum y_j b_j
  QMatrix m(a.ambient_, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < a.ambient_; ++r) m(r, i) = a.basis_[i][r];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < a.ambient_; ++r) m(r, a.dim() + j) = -b.basis_[j][r];
  std::vector<QVector> vs;
  for (const auto& k : kernel_basis(m)) {
    QVector v(a.ambient_, 0);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t r = 0; r < a.ambient_; ++r) v[r] += k[i] * a.basis_[i][r];
    vs.push_back(std::move(v));
  }
  return Subspace::span(a.ambient_, vs);
}

Json Subspace::to_json() const {
  Json j = Json::array();
  for (const auto& v : basis_) j.push_back(voa::to_json(v));
  return j;
}

}  // namespace voa::hodge
