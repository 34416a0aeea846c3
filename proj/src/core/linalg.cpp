#include "voa/core/linalg.hpp"

#include <algorithm>

namespace voa {

Rational det_exact(const QMatrix& m) { return det_bareiss(m); }

Rational det_exact(const SparseRationalMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  return det_bareiss(m.dense());
}

Poly det_exact(const Matrix<Poly>& m) { return det_bareiss(m); }

RowEchelon row_echelon(QMatrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return row_echelon(m).pivots.size(); }

std::vector<QVector> kernel_basis(const QMatrix& m) {
  RowEchelon re = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : re.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < re.pivots.size(); ++r) v[re.pivots[r]] = -re.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVector> kernel_basis(const SparseRationalMatrix& m) { return kernel_basis(m.dense()); }

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw ShapeError("right-hand side length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon re = row_echelon(aug);
  QVector x(m.cols());
  for (std::size_t r = 0; r < re.pivots.size(); ++r) {
    if (re.pivots[r] == m.cols()) return std::nullopt;
    x[re.pivots[r]] = re.reduced(r, m.cols());
  }
  return x;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon re = row_echelon(aug);
  if (re.pivots.size() < n || re.pivots[n - 1] != n - 1) throw DegenerateInputError("matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = re.reduced(i, n + j);
  return inv;
}

LdlPivots ldl_pivots(const QMatrix& m) {
  if (!m.square()) throw ShapeError("LDL of a non-square matrix");
  QMatrix a = m;
  LdlPivots out;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    Rational d = a(k, k);
    out.pivots.push_back(d);
    if (is_zero(d)) {
      out.complete = false;
      return out;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      Rational f = a(i, k) / d;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return out;
}

bool positive_definite(const QMatrix& m) {
  LdlPivots p = ldl_pivots(m);
  if (!p.complete) return false;
  return std::all_of(p.pivots.begin(), p.pivots.end(), [](const Rational& d) { return sgn(d) > 0; });
}

std::vector<int> t_valuations(const Matrix<Poly>& m) {
  if (!m.square()) throw ShapeError("t-valuations of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  Poly det = det_exact(m);
  if (det.is_zero()) throw DegenerateInputError("determinant vanishes identically in t");
  const int bound = det.valuation() + 1;
  // Every elementary divisor exponent is at most ord_t det, so the Smith form
  // is already determined modulo t^(ord_t det + 1).
  Matrix<Series> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Series(0, m(i, j).coeffs(), bound);
  std::vector<int> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t bi = k, bj = k;
    int best = bound;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        int v = a(i, j).valuation();
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best >= bound) throw DegenerateInputError("Smith reduction ran past the determinant order");
    for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(bi, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, bj));
    Series unit_inv = a(k, k).shifted(-best).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Series f = a(i, k).shifted(-best) * unit_inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) = (a(i, j) - f * a(k, j)).truncated(bound);
    }
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace voa
