#pragma once

#include <map>
#include <string>
#include <vector>

#include "voa/core/series.hpp"

namespace voa {

/// Finite sum  sum_lambda x^lambda sum_j S_{lambda,j}(x) (log x)^j  where every
/// S_{lambda,j} is a truncated Laurent series. Branch exponents lambda are
/// rational; distinct branches are kept apart even when they differ by an
/// integer, so the caller's grouping survives arithmetic.
class LogSeries {
 public:
  using Branch = std::vector<Series>;  // indexed by log power j

  LogSeries() = default;

  /// Adds s * x^lambda (log x)^j.
  void add(const Rational& lambda, unsigned log_power, const Series& s);

  const std::map<Rational, Branch>& branches() const { return branches_; }
  /// Maximal log power J over all branches (0 when empty).
  unsigned max_log_power() const;
  /// Component for (lambda, j); exact zero when absent.
  Series component(const Rational& lambda, unsigned log_power) const;

  /// Euler operator x d/dx.
  LogSeries euler_derivative() const;
  /// Multiplication by a Laurent series in x (no logs, no branch shift).
  LogSeries times(const Series& s) const;

  LogSeries& operator+=(const LogSeries& o);
  LogSeries& operator-=(const LogSeries& o);
  LogSeries& operator*=(const Rational& s);
  friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
  friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
  friend LogSeries operator*(LogSeries a, const Rational& s) { return a *= s; }

  /// True when every branch/log component vanishes on its window.
  bool is_zero() const;
  /// Agreement of every branch/log coefficient on the common window.
  friend bool operator==(const LogSeries& a, const LogSeries& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void prune();
  std::map<Rational, Branch> branches_;
};

}  // namespace voa
