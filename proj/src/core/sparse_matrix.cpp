#include "voa/core/sparse_matrix.hpp"

namespace voa {

SparseRationalMatrix::SparseRationalMatrix(const QMatrix& dense) : rows_(dense.rows()), cols_(dense.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!voa::is_zero(dense(i, j))) entries_.emplace(Key{i, j}, dense(i, j));
}

SparseRationalMatrix SparseRationalMatrix::identity(std::size_t n) {
  SparseRationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void SparseRationalMatrix::check(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw ShapeError("sparse matrix index out of range");
}

Rational SparseRationalMatrix::get(std::size_t i, std::size_t j) const {
  check(i, j);
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseRationalMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
  check(i, j);
  if (voa::is_zero(v))
    entries_.erase({i, j});
  else
    entries_[{i, j}] = v;
}

void SparseRationalMatrix::add_to(std::size_t i, std::size_t j, const Rational& v) {
  check(i, j);
  if (voa::is_zero(v)) return;
  auto [it, inserted] = entries_.try_emplace({i, j}, v);
  if (!inserted) {
    it->second += v;
    if (voa::is_zero(it->second)) entries_.erase(it);
  }
}

QMatrix SparseRationalMatrix::dense() const {
  QMatrix m(rows_, cols_);
  for (const auto& [k, v] : entries_) m(k.first, k.second) = v;
  return m;
}

SparseRationalMatrix SparseRationalMatrix::transpose() const {
  SparseRationalMatrix t(cols_, rows_);
  for (const auto& [k, v] : entries_) t.entries_.emplace(Key{k.second, k.first}, v);
  return t;
}

SparseRationalMatrix operator+(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("sparse sum shape mismatch");
  SparseRationalMatrix out = a;
  for (const auto& [k, v] : b.entries_) out.add_to(k.first, k.second, v);
  return out;
}

SparseRationalMatrix operator-(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  return a + Rational(-1) * b;
}

SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("sparse product shape mismatch");
  // Row-indexed view of b for the inner loop.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> brows(b.rows_);
  for (const auto& [k, v] : b.entries_) brows[k.first].emplace_back(k.second, v);
  SparseRationalMatrix out(a.rows_, b.cols_);
  for (const auto& [k, v] : a.entries_)
    for (const auto& [j, w] : brows[k.second]) out.add_to(k.first, j, v * w);
  return out;
}

SparseRationalMatrix operator*(const Rational& s, const SparseRationalMatrix& a) {
  SparseRationalMatrix out(a.rows_, a.cols_);
  if (voa::is_zero(s)) return out;
  for (const auto& [k, v] : a.entries_) out.entries_.emplace(k, s * v);
  return out;
}

SparseRationalMatrix commutator(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  return a * b - b * a;
}

}  // namespace voa
