#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voa/core/log_series.hpp"
#include "voa/hodge/subspace.hpp"

namespace voa::hodge {

/// Square nilpotent matrix with its nilpotency index (least k with N^k = 0).
class NilpotentEndo {
 public:
  /// NilpotencyError when no power vanishes.
  explicit NilpotentEndo(QMatrix n);
  const QMatrix& matrix() const { return n_; }
  std::size_t dim() const { return n_.rows(); }
  unsigned index() const { return index_; }
  /// N^k, cached.
  const QMatrix& power(unsigned k) const;

 private:
  QMatrix n_;
  unsigned index_ = 0;
  std::vector<QMatrix> powers_;
};

/// Increasing filtration centered at 0: W_k = 0 for k < -nu+1 and W_k = V for k >= nu-1.
struct WeightFiltration {
  std::size_t ambient = 0;
  int low = 0, high = 0;
  std::map<int, Subspace> steps;

  const Subspace& W(int k) const;
  std::size_t gr_dim(int k) const { return W(k).dim() - W(k - 1).dim(); }
  Json to_json() const;

 private:
  Subspace zero_, full_;
  friend WeightFiltration weight_filtration(const NilpotentEndo& n);
  friend WeightFiltration make_filtration(std::size_t ambient, std::map<int, Subspace> steps);
};

WeightFiltration make_filtration(std::size_t ambient, std::map<int, Subspace> steps);

/// W_k = sum_{q >= max(0, -k)} ker N^(k+q+1) intersected with im N^q.
WeightFiltration weight_filtration(const NilpotentEndo& n);

struct PropertyReport {
  bool ok = true;
  std::string failure;
};

/// Nestedness, N W_k inside W_(k-2) and N^k : Gr_k -> Gr_-k bijective for k >= 0.
PropertyReport check_weight_properties(const NilpotentEndo& n, const WeightFiltration& w);

/// Forms B_k(u, v) = B(u, N^k v) on representatives of Gr_k, k >= 0.
struct GradedPairing {
  std::map<int, QMatrix> forms;
  bool nondegenerate = true;
  std::optional<int> witness;
  Json to_json() const;
};

/// InvarianceError unless B(Nu, v) + B(u, Nv) = 0.
GradedPairing graded_pairing(const QMatrix& b, const NilpotentEndo& n, const WeightFiltration& w);

/// exp(s N), exact because N is nilpotent.
QMatrix nilpotent_exp(const NilpotentEndo& n, const Rational& s = 1);
/// ad N on gl(V), in the row-major basis E_ij.
QMatrix adjoint_action(const QMatrix& n);

/// exp(log t * N / 2 pi i) applied to each frame vector. Component c of vector
/// i is a log series whose (log t)^k coefficient carries the formal factor
/// (2 pi i)^-k.
std::vector<std::vector<LogSeries>> limit_twist(const std::vector<QVector>& frame, const NilpotentEndo& n);

}  // namespace voa::hodge
