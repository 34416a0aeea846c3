#include "voa/fock/graded_field.hpp"

#include "voa/core/errors.hpp"

namespace voa::fock {

GradedField::GradedField(std::string symbol, int weight, DimFn dim, ApplyFn apply)
    : symbol_(std::move(symbol)),
      weight_(weight),
      dim_(std::move(dim)),
      apply_(std::move(apply)),
      cache_(std::make_shared<Cache>()) {}

QVector GradedField::apply(int n, int degree, const QVector& v) const {
  int target = target_degree(n, degree);
  if (v.size() != dim(degree)) throw ShapeError("vector length does not match the degree");
  if (target < 0) return {};
  bool zero = true;
  for (const auto& x : v) zero = zero && voa::is_zero(x);
  if (zero) return QVector(dim(target));
  QVector out = apply_(n, degree, v);
  if (out.size() != dim(target)) throw ShapeError("mode image has the wrong length");
  return out;
}

const QMatrix& GradedField::mode(int n, int degree) const {
  const auto key = std::make_pair(n, degree);
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->table.find(key);
    if (it != cache_->table.end()) return it->second;
  }
  int target = target_degree(n, degree);
  const std::size_t cols = dim(degree);
  QMatrix m(dim(target), cols);
  for (std::size_t j = 0; j < cols && target >= 0; ++j) {
    QVector e(cols);
    e[j] = 1;
    QVector col = apply(n, degree, e);
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  }
  std::lock_guard lock(cache_->mutex);
  return cache_->table.try_emplace(key, std::move(m)).first->second;
}

GradedField operator+(const GradedField& a, const GradedField& b) {
  if (a.weight_ != b.weight_) throw DomainError("fields of different weight cannot be added");
  return GradedField(a.symbol_ + " + " + b.symbol_, a.weight_, a.dim_, [a, b](int n, int d, const QVector& v) {
    QVector x = a.apply(n, d, v), y = b.apply(n, d, v);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
  });
}

GradedField operator*(const Rational& s, const GradedField& a) {
  return GradedField(voa::to_string(s) + "*(" + a.symbol_ + ")", a.weight_, a.dim_,
                     [a, s](int n, int d, const QVector& v) {
                       QVector x = a.apply(n, d, v);
                       for (auto& e : x) e *= s;
                       return x;
                     });
}

Json GradedField::to_json(int mode_cap, int degree_cap) const {
  Json modes = Json::array();
  for (int n = -mode_cap; n <= mode_cap; ++n)
    for (int d = 0; d <= degree_cap; ++d) {
      int target = target_degree(n, d);
      if (target < 0 || target > degree_cap) continue;
      modes.push_back({{"mode", n}, {"level_in", d}, {"level_out", target}, {"matrix", voa::to_json(mode(n, d))}});
    }
  return Json{{"symbol", symbol_}, {"weight", weight_}, {"modes", modes}};
}

QMatrix compose(const GradedField& a, int m, const GradedField& b, int n, int degree) {
  int mid = b.target_degree(n, degree);
  int out = a.target_degree(m, mid);
  QMatrix result(a.dim(out), b.dim(degree));
  if (mid < 0 || out < 0) return result;
  const QMatrix& inner = b.mode(n, degree);
  for (std::size_t j = 0; j < inner.cols(); ++j) {
    QVector col = a.apply(m, mid, inner.col(j));
    for (std::size_t i = 0; i < col.size(); ++i) result(i, j) = col[i];
  }
  return result;
}

QMatrix commutator(const GradedField& a, int m, const GradedField& b, int n, int degree) {
  return compose(a, m, b, n, degree) - compose(b, n, a, m, degree);
}

namespace {

Rational binomial_int(int n, int k) { return binomial(Rational(n), static_cast<unsigned>(k)); }

}  // namespace

LocalityReport locality_check(const GradedField& a, const GradedField& b, int degree_cap, int n_cap,
                              std::optional<int> mode_cap) {
  const int mc = mode_cap.value_or(degree_cap + a.weight() + b.weight());
  LocalityReport report;
  for (int N = 0; N <= n_cap; ++N) {
    std::optional<std::string> failure;
    for (int d = 0; d <= degree_cap && !failure; ++d)
      for (int m = -mc; m <= mc && !failure; ++m)
        for (int n = -mc; n <= mc && !failure; ++n) {
          // coefficient of z^{-m-1} w^{-n-1}: sum_i C(N, i) (-1)^i [A_(m+N-i), B_(n+i)]
          int out = a.target_degree(m + N, b.target_degree(n, d));
          if (out < 0 || out > degree_cap) continue;
          QMatrix acc(a.dim(out), b.dim(d));
          for (int i = 0; i <= N; ++i) {
            Rational coeff = binomial_int(N, i) * (i % 2 ? -1 : 1);
            acc += coeff * commutator(a, m + N - i, b, n + i, d);
          }
          if (!acc.is_zero())
            failure = "N=" + std::to_string(N) + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                      " degree=" + std::to_string(d);
        }
    if (!failure) {
      report.order = N;
      report.witness.reset();
      return report;
    }
    report.witness = failure;
  }
  return report;
}

Json LocalityReport::to_json() const {
  return Json{{"order", order ? Json(*order) : Json(nullptr)}, {"witness", witness ? Json(*witness) : Json(nullptr)}};
}

Json AxiomReport::to_json() const {
  return Json{{"passed", passed}, {"checks", checks}, {"witness", witness ? Json(*witness) : Json(nullptr)}};
}

AxiomReport check_vacuum_axiom(const GradedField& a, const QVector& state) {
  AxiomReport r;
  if (a.dim(0) != 1) throw DomainError("vacuum axiom needs a one-dimensional degree-0 space");
  for (int n = -1; n <= a.weight() + 2; ++n) {
    if (a.target_degree(n, 0) < 0) continue;
    const QMatrix& m = a.mode(n, 0);
    QVector image = m.col(0);
    ++r.checks;
    if (n >= 0) {
      QVector zero(image.size());
      if (image != zero && !r.witness) {
        r.passed = false;
        r.witness = "A_(" + std::to_string(n) + ")|0> != 0";
      }
    } else if (image != state && !r.witness) {
      r.passed = false;
      r.witness = "A_(-1)|0> differs from A";
    }
  }
  return r;
}

}  // namespace voa::fock
