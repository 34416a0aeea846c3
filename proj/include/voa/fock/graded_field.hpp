#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "voa/core/json_io.hpp"
#include "voa/core/matrix.hpp"

namespace voa::fock {

/// Field Y(A, z) = sum_n A_(n) z^{-n-1} on a Z_{>=0}-graded module. A_(n) maps degree d to
/// degree d + weight - n - 1. Modes act on coordinate vectors on demand; mode matrices are
/// cached per (n, d), so products never see a truncation edge.
class GradedField {
 public:
  using DimFn = std::function<std::size_t(int degree)>;
  /// A_(n) applied to a degree-d coordinate vector; only called when the target degree is >= 0.
  using ApplyFn = std::function<QVector(int n, int degree, const QVector& v)>;

  GradedField(std::string symbol, int weight, DimFn dim, ApplyFn apply);

  const std::string& symbol() const { return symbol_; }
  int weight() const { return weight_; }
  std::size_t dim(int degree) const { return degree < 0 ? 0 : dim_(degree); }
  int target_degree(int n, int degree) const { return degree + weight_ - n - 1; }
  /// A_(n) on degree d (a 0-row matrix when the target degree is negative).
  const QMatrix& mode(int n, int degree) const;
  QVector apply(int n, int degree, const QVector& v) const;

  /// Linear combination of fields of equal weight on the same module.
  friend GradedField operator+(const GradedField& a, const GradedField& b);
  friend GradedField operator*(const Rational& s, const GradedField& a);

  /// {"symbol", "weight", "modes": [{"mode": n, "level_in": d, "matrix": ...}]}
  Json to_json(int mode_cap, int degree_cap) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<int, int>, QMatrix> table;
  };
  std::string symbol_;
  int weight_;
  DimFn dim_;
  ApplyFn apply_;
  std::shared_ptr<Cache> cache_;
};

/// Composition of A_(m) after B_(n) on degree d, and the commutator [A_(m), B_(n)].
QMatrix compose(const GradedField& a, int m, const GradedField& b, int n, int degree);
QMatrix commutator(const GradedField& a, int m, const GradedField& b, int n, int degree);

struct LocalityReport {
  std::optional<int> order;
  /// First nonvanishing coefficient at the largest tried N when no order was found.
  std::optional<std::string> witness;
  Json to_json() const;
};

/// Least N <= n_cap with (z - w)^N [Y(A, z), Y(B, w)] = 0 on the truncation: coefficients of
/// z^{-m-1} w^{-n-1}, |m|, |n| <= mode_cap, between source and target degrees <= degree_cap.
LocalityReport locality_check(const GradedField& a, const GradedField& b, int degree_cap, int n_cap = 4,
                              std::optional<int> mode_cap = std::nullopt);

struct AxiomReport {
  bool passed = true;
  int checks = 0;
  std::optional<std::string> witness;
  Json to_json() const;
};

/// Y(A, z)|0> in V[[z]] with constant term A: A_(n)|0> = 0 for n >= 0 and A_(-1)|0> = A.
/// The vacuum is basis vector 0 of degree 0; `state` holds A in the degree-`weight` basis.
AxiomReport check_vacuum_axiom(const GradedField& a, const QVector& state);

}  // namespace voa::fock
