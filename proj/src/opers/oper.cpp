#include "voa/opers/oper.hpp"

#include <sstream>

#include "voa/core/errors.hpp"
#include "voa/core/linalg.hpp"

namespace voa {

MonicDiffOp::MonicDiffOp(std::vector<Series> q, bool sl_mode) : q_(std::move(q)) {
  if (sl_mode && !q_.empty() && !q_.front().is_zero())
    throw OperShapeError("SL(n) operator needs q_1 = 0, got " + q_.front().to_string());
}

MonicDiffOp MonicDiffOp::from_coefficients(const std::vector<Series>& c) {
  if (c.empty()) throw ShapeError("operator without coefficients");
  const Series& top = c.back();
  if (!(top.exact() && top == Series(1))) throw OperShapeError("operator is not monic: " + top.to_string());
  const std::size_t n = c.size() - 1;
  std::vector<Series> q;
  q.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) q.push_back(-c[n - j]);
  return MonicDiffOp(std::move(q));
}

Series MonicDiffOp::coefficient(std::size_t k) const {
  const std::size_t n = order();
  if (k > n) return Series();
  if (k == n) return Series(1);
  return -q_[n - k - 1];
}

std::vector<Series> MonicDiffOp::coefficients() const {
  std::vector<Series> c;
  for (std::size_t k = 0; k <= order(); ++k) c.push_back(coefficient(k));
  return c;
}

int MonicDiffOp::precision() const {
  int p = Series::kExact;
  for (const auto& s : q_) p = std::min(p, s.precision());
  return p;
}

MonicDiffOp MonicDiffOp::truncated(int precision) const {
  std::vector<Series> q;
  for (const auto& s : q_) q.push_back(s.truncated(precision));
  return MonicDiffOp(std::move(q));
}

Series MonicDiffOp::apply(const Series& f) const {
  Series out, d = f;
  for (std::size_t k = 0; k <= order(); ++k) {
    out += coefficient(k) * d;
    if (k < order()) d = d.derivative();
  }
  return out;
}

bool operator==(const MonicDiffOp& a, const MonicDiffOp& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t j = 0; j < a.order(); ++j)
    if (a.q_[j] != b.q_[j]) return false;
  return true;
}

std::string MonicDiffOp::to_string() const {
  std::ostringstream os;
  const std::size_t n = order();
  os << "d^" << n;
  for (std::size_t j = 1; j <= n; ++j) {
    if (q_[j - 1].is_zero() && q_[j - 1].exact()) continue;
    os << " - (" << q_[j - 1].to_string() << ")";
    if (n - j == 1) os << "*d";
    else if (n - j > 1) os << "*d^" << (n - j);
  }
  return os.str();
}

Json MonicDiffOp::to_json() const {
  Json j;
  j["order"] = order();
  Json q = Json::array();
  for (const auto& s : q_) q.push_back(voa::to_json(s));
  j["q"] = q;
  return j;
}

MonicDiffOp MonicDiffOp::from_json(const Json& j) {
  std::vector<Series> q;
  for (const auto& s : j.at("q")) q.push_back(series_from_json(s));
  if (j.contains("order") && j.at("order").get<std::size_t>() != q.size())
    throw ShapeError("operator order does not match the coefficient count");
  return MonicDiffOp(std::move(q));
}

std::vector<Series> compose_operators(const std::vector<Series>& a, const std::vector<Series>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Series> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() && a[i].exact()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      // a d^i b d^j = a sum_r C(i, r) b^(r) d^(i + j - r)
      Series deriv = b[j];
      for (std::size_t r = 0; r <= i; ++r) {
        out[i + j - r] += a[i] * deriv * binomial(Rational(static_cast<long>(i)), static_cast<unsigned>(r));
        if (r < i) deriv = deriv.derivative();
      }
    }
  }
  return out;
}

Json ShapeReport::to_json() const {
  Json j;
  j["ok"] = ok;
  if (witness) j["witness"] = {witness->first, witness->second};
  if (!reason.empty()) j["reason"] = reason;
  return j;
}

ShapeReport oper_shape_check(const ConnectionMatrix& a) {
  ShapeReport r;
  if (!a.square()) {
    r.ok = false;
    r.reason = "connection matrix is not square";
    return r;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = j + 1; i < a.rows(); ++i) {
      const Series& x = a(i, j);
      if (i == j + 1 && !x.is_unit()) {
        r.ok = false;
        r.witness = {i, j};
        r.reason = x.is_zero() ? "vanishing subdiagonal entry" : "subdiagonal entry is not a unit: " + x.to_string();
        return r;
      }
      if (i > j + 1 && !x.is_zero()) {
        r.ok = false;
        r.witness = {i, j};
        r.reason = "nonzero entry below the subdiagonal: " + x.to_string();
        return r;
      }
    }
  }
  return r;
}

namespace {

Series invert(const Series& s, std::optional<int> precision) {
  try {
    return s.inverse();
  } catch (const PrecisionError&) {
    if (!precision) throw;
    return s.truncated(*precision).inverse();
  }
}

Matrix<Series> minor(const Matrix<Series>& m, std::size_t row, std::size_t col) {
  Matrix<Series> out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace

GaugeElement gauge_inverse(const GaugeElement& g, std::optional<int> precision) {
  if (!g.square()) throw ShapeError("gauge element is not square");
  const std::size_t n = g.rows();
  Series det = det_expand(g);
  if (det.is_zero()) throw GaugeError("gauge element is not invertible (determinant vanishes on the window)");
  Series inv_det = invert(det, precision);
  GaugeElement out(n, n);
  if (n == 1) {
    out(0, 0) = inv_det;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Series cof = det_expand(minor(g, j, i)) * inv_det;
      out(i, j) = (i + j) % 2 == 0 ? cof : -cof;
    }
  return out;
}

ConnectionMatrix gauge_transform(const GaugeElement& g, const ConnectionMatrix& a, std::optional<int> precision) {
  if (!a.square() || !g.square() || a.rows() != g.rows()) throw ShapeError("gauge and connection sizes differ");
  GaugeElement inv = gauge_inverse(g, precision);
  GaugeElement dg = g.map([](const Series& s) { return s.derivative(); });
  return g * a * inv - dg * inv;
}

ConnectionMatrix companion_matrix(const std::vector<Series>& first_row) {
  const std::size_t n = first_row.size();
  ConnectionMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(0, j) = first_row[j];
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = Series(1);
  return m;
}

// Horizontal sections psi' = -A psi of the companion connection have last
// coordinate y with y^(n) = sum_j (-1)^j a_j y^(n-j).
std::vector<Series> companion_row(const MonicDiffOp& op) {
  std::vector<Series> row;
  for (std::size_t j = 1; j <= op.order(); ++j) row.push_back(j % 2 == 0 ? op.q(j) : -op.q(j));
  return row;
}

MonicDiffOp companion_operator(const std::vector<Series>& first_row) {
  std::vector<Series> q;
  for (std::size_t j = 1; j <= first_row.size(); ++j) q.push_back(j % 2 == 0 ? first_row[j - 1] : -first_row[j - 1]);
  return MonicDiffOp(std::move(q));
}

CompanionForm to_companion(const ConnectionMatrix& a, std::optional<int> precision) {
  ShapeReport shape = oper_shape_check(a);
  if (!shape.ok) throw OperShapeError(shape.reason);
  const std::size_t n = a.rows();

  GaugeElement diag = GaugeElement::identity(n);
  for (std::size_t i = 1; i < n; ++i) diag(i, i) = diag(i - 1, i - 1) * invert(a(i, i - 1), precision);
  ConnectionMatrix a1 = gauge_transform(diag, a, precision);

  // rows r_n = e_n, r_(k-1) = r_k A - r_k'
  std::vector<std::vector<Series>> rows(n, std::vector<Series>(n));
  rows[n - 1][n - 1] = Series(1);
  for (std::size_t k = n - 1; k > 0; --k) {
    for (std::size_t j = 0; j < n; ++j) {
      Series acc = -rows[k][j].derivative();
      for (std::size_t l = 0; l < n; ++l)
        if (!(rows[k][l].is_zero() && rows[k][l].exact())) acc += rows[k][l] * a1(l, j);
      rows[k - 1][j] = acc;
    }
  }
  GaugeElement g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = j < i ? Series() : rows[i][j];

  ConnectionMatrix comp = gauge_transform(g, a1, precision);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Series expected = (j + 1 == i) ? Series(1) : Series();
      if (comp(i, j) != expected) throw DomainError("companion reduction left a stray entry");
    }
  CompanionForm out;
  out.first_row = comp.row(0);
  out.op = companion_operator(out.first_row);
  out.gauge = g * diag;
  return out;
}

Json to_json(const Matrix<Series>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix<Series> series_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("series matrix must be a list of rows");
  const std::size_t n = j.size();
  const std::size_t cols = n ? j.at(0).size() : 0;
  Matrix<Series> m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    if (j.at(i).size() != cols) throw ShapeError("ragged series matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = series_from_json(j.at(i).at(k));
  }
  return m;
}

}  // namespace voa
