#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "voa/core/matrix.hpp"
#include "voa/core/mpoly.hpp"
#include "voa/core/poly.hpp"
#include "voa/core/series.hpp"
#include "voa/core/sparse_matrix.hpp"

namespace voa {

inline bool is_zero_value(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero_value(const Poly& x) { return x.is_zero(); }
inline bool is_zero_value(const MPoly& x) { return x.is_zero(); }
inline bool is_zero_value(const Series& x) { return x.is_zero(); }
/// Zero that can be dropped from a sum without losing precision information.
template <typename T>
bool is_exact_zero_value(const T& x) {
  if constexpr (requires { x.exact(); })
    return x.is_zero() && x.exact();
  else
    return is_zero_value(x);
}

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division `exact_div(a, b)`.
template <typename T>
T det_bareiss(Matrix<T> m) {
  if (!m.square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && is_zero_value(m(piv, k))) ++piv;
    if (piv == n) return T(0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? T(0) - d : d;
}

/// Division-free determinant by Laplace expansion memoized over column
/// subsets; for small matrices over rings without exact division (MPoly).
template <typename T>
T det_expand(const Matrix<T>& m) {
  if (!m.square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n > 20) throw DomainError("Laplace expansion limited to 20x20");
  // minors[mask] = det of rows (n - popcount(mask))..n-1 against columns in mask.
  std::unordered_map<unsigned, T> minors;
  minors.emplace(0u, T(1));
  for (std::size_t size = 1; size <= n; ++size) {
    std::size_t row = n - size;
    std::unordered_map<unsigned, T> next;
    for (const auto& [mask, sub] : minors) {
      (void)sub;
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        unsigned full = mask | (1u << c);
        if (next.count(full)) continue;
        T acc(0);
        int sign_pos = 0;
        for (std::size_t cc = 0; cc < n; ++cc) {
          if (!(full & (1u << cc))) continue;
          const T& minor = minors.at(full & ~(1u << cc));
          if (!is_exact_zero_value(m(row, cc)) && !is_exact_zero_value(minor)) {
            T term = m(row, cc) * minor;
            acc = (sign_pos % 2 == 0) ? T(acc + term) : T(acc - term);
          }
          ++sign_pos;
        }
        next.emplace(full, acc);
      }
    }
    minors = std::move(next);
  }
  return minors.at((1u << n) - 1);
}

/// Exact determinant of a sparse rational matrix.
Rational det_exact(const SparseRationalMatrix& m);
Rational det_exact(const QMatrix& m);
/// Exact determinant over the deformation ring Q[t].
Poly det_exact(const Matrix<Poly>& m);

/// Reduced row echelon form; returns pivot column indices.
struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(QMatrix m);
std::size_t rank(const QMatrix& m);

/// Basis of the right kernel, one vector per free column (deterministic).
std::vector<QVector> kernel_basis(const SparseRationalMatrix& m);
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Some x with m x = b, or nullopt.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
/// Inverse of a nonsingular square matrix (DegenerateInputError otherwise).
QMatrix inverse(const QMatrix& m);

/// Pivots of the symmetric elimination m = L D L^T without row exchanges.
/// Stops after the first zero pivot (complete == false in that case).
struct LdlPivots {
  std::vector<Rational> pivots;
  bool complete = true;
};
LdlPivots ldl_pivots(const QMatrix& m);
bool positive_definite(const QMatrix& m);

/// t-adic valuations of the diagonal of a Smith normal form of m over the
/// local ring Q[t]_(t), ascending. Their sum is ord_t det(m).
std::vector<int> t_valuations(const Matrix<Poly>& m);

}  // namespace voa
