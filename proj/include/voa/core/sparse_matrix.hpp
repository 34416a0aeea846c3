#pragma once

#include <map>
#include <utility>

#include "voa/core/matrix.hpp"

namespace voa {

/// Sparse rational matrix. Entries are kept in row-major key order and an
/// explicit zero is never stored.
class SparseRationalMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  SparseRationalMatrix() = default;
  SparseRationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  explicit SparseRationalMatrix(const QMatrix& dense);

  static SparseRationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  const std::map<Key, Rational>& entries() const { return entries_; }

  Rational get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& v);
  void add_to(std::size_t i, std::size_t j, const Rational& v);

  QMatrix dense() const;

  SparseRationalMatrix transpose() const;
  friend SparseRationalMatrix operator+(const SparseRationalMatrix& a, const SparseRationalMatrix& b);
  friend SparseRationalMatrix operator-(const SparseRationalMatrix& a, const SparseRationalMatrix& b);
  friend SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b);
  friend SparseRationalMatrix operator*(const Rational& s, const SparseRationalMatrix& a);
  friend bool operator==(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  bool is_zero() const { return entries_.empty(); }

 private:
  void check(std::size_t i, std::size_t j) const;
  std::size_t rows_ = 0, cols_ = 0;
  std::map<Key, Rational> entries_;
};

SparseRationalMatrix commutator(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

}  // namespace voa
