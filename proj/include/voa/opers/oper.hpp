#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "voa/core/json_io.hpp"
#include "voa/core/matrix.hpp"
#include "voa/core/series.hpp"

namespace voa {

/// Matrix A of the connection  D = d/dt + A  over truncated Laurent series.
using ConnectionMatrix = Matrix<Series>;
/// Invertible matrix of series acting by  g.A = g A g^-1 - g' g^-1.
using GaugeElement = Matrix<Series>;

/// Scalar operator  d^n - q_1 d^(n-1) - ... - q_n  acting on the left.
/// In SL(n) mode the construction asserts q_1 = 0.
class MonicDiffOp {
 public:
  MonicDiffOp() = default;
  explicit MonicDiffOp(std::vector<Series> q, bool sl_mode = false);

  /// From the full coefficient list c_0..c_n of  sum c_k d^k  with c_n = 1.
  static MonicDiffOp from_coefficients(const std::vector<Series>& c);

  std::size_t order() const { return q_.size(); }
  const std::vector<Series>& q() const { return q_; }
  /// q_j for 1 <= j <= n.
  const Series& q(std::size_t j) const { return q_.at(j - 1); }
  /// Coefficient of d^k, so that coefficient(order()) = 1.
  Series coefficient(std::size_t k) const;
  std::vector<Series> coefficients() const;
  /// Smallest absolute precision among the q_j.
  int precision() const;
  MonicDiffOp truncated(int precision) const;

  /// Applies the operator to a series f.
  Series apply(const Series& f) const;

  friend bool operator==(const MonicDiffOp& a, const MonicDiffOp& b);
  std::string to_string() const;
  Json to_json() const;
  static MonicDiffOp from_json(const Json& j);

 private:
  std::vector<Series> q_;
};

/// Composition of operators  sum a_k d^k  given as coefficient lists.
std::vector<Series> compose_operators(const std::vector<Series>& a, const std::vector<Series>& b);

struct ShapeReport {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string reason;
  Json to_json() const;
};

/// Subdiagonal entries must be nonzero with valuation 0, entries further
/// below must vanish.
ShapeReport oper_shape_check(const ConnectionMatrix& a);

/// Inverse of g. Exact when det g is a monomial; otherwise `precision`
/// bounds the inversion of det g (PrecisionError when it is missing).
GaugeElement gauge_inverse(const GaugeElement& g, std::optional<int> precision = std::nullopt);

ConnectionMatrix gauge_transform(const GaugeElement& g, const ConnectionMatrix& a,
                                 std::optional<int> precision = std::nullopt);

/// Companion connection with first row (a_1..a_n) and 1 on the subdiagonal.
ConnectionMatrix companion_matrix(const std::vector<Series>& first_row);
/// First row of the companion connection whose horizontal sections carry op.
std::vector<Series> companion_row(const MonicDiffOp& op);
MonicDiffOp companion_operator(const std::vector<Series>& first_row);

struct CompanionForm {
  MonicDiffOp op;
  std::vector<Series> first_row;
  GaugeElement gauge;
};

/// Gauge to the companion representative: first a diagonal gauge making the
/// subdiagonal 1, then a unipotent upper-triangular one.
CompanionForm to_companion(const ConnectionMatrix& a, std::optional<int> precision = std::nullopt);

Json to_json(const Matrix<Series>& m);
Matrix<Series> series_matrix_from_json(const Json& j);

}  // namespace voa
