#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voa/core/json_io.hpp"
#include "voa/core/matrix.hpp"
#include "voa/core/mpoly.hpp"
#include "voa/core/partitions.hpp"
#include "voa/core/poly.hpp"
#include "voa/virasoro/virasoro.hpp"

namespace voa::vir {

template <typename R>
bool is_zero_coeff(const R& x) {
  if constexpr (std::is_same_v<R, Rational>)
    return voa::is_zero(x);
  else
    return x.is_zero();
}

/// Vector of V(c, h): coefficients on the basis L_{-l1} ... L_{-lk} v, l1 >= ... >= lk.
template <typename R>
using VermaVector = std::map<Partition, R>;

/// (c, h) drawn from one coefficient ring: Rational for exact points, Poly for h -> h + t.
template <typename R>
struct VermaParameters {
  R c;
  R h;
};

/// Coefficients in Q[c, h]; variable 0 is c, variable 1 is h.
using SymbolicVector = VermaVector<MPoly>;

/// L_n applied to a basis vector, with (c, h) kept symbolic. Cached; safe to call concurrently.
const SymbolicVector& act_mode_symbolic(int n, const Partition& basis);
SymbolicVector act_symbolic(const VirasoroElement& x, const SymbolicVector& v);

template <typename R>
VermaVector<R> act(const VirasoroElement& x, const VermaVector<R>& v, const VermaParameters<R>& p) {
  VermaVector<R> out;
  const std::vector<R> point{p.c, p.h};
  auto add = [&](const Partition& b, const R& val) {
    auto it = out.find(b);
    if (it == out.end()) {
      if (!is_zero_coeff(val)) out.emplace(b, val);
    } else {
      it->second = it->second + val;
      if (is_zero_coeff(it->second)) out.erase(it);
    }
  };
  for (const auto& [basis, coeff] : v) {
    for (const auto& [n, a] : x.modes)
      for (const auto& [b, poly] : act_mode_symbolic(n, basis)) add(b, R(a) * coeff * poly.template evaluate<R>(point));
    if (!voa::is_zero(x.central)) add(basis, R(x.central) * p.c * coeff);
  }
  return out;
}

/// Symbolic contravariant form on level N, basis partitions_of(N).
Matrix<MPoly> gram_matrix_symbolic(int N);

template <typename R>
Matrix<R> gram_matrix(const VermaParameters<R>& p, int N) {
  const Matrix<MPoly>& g = gram_matrix_symbolic(N);
  const std::vector<R> point{p.c, p.h};
  return g.map([&](const MPoly& e) { return e.template evaluate<R>(point); });
}

/// Level-N Gram matrix with h deformed to h + t.
Matrix<Poly> deformed_gram_matrix(const Rational& c, const Rational& h, int N);

struct JantzenReport {
  int level = 0;
  /// dims[m-1] = dim M(m)_N for m = 1 .. max valuation.
  std::vector<int> dims;
  int ord_det = 0;
  std::vector<int> valuations;
  Json to_json() const;
};

/// Layers of the Jantzen filtration at level N through the deformation h -> h + t.
JantzenReport jantzen_filtration(const Rational& c, const Rational& h, int N);

/// dim V(c, h)_N for N = 0 .. n_max.
std::vector<long long> graded_character(int n_max);

enum class UnitaryKind { Continuum, DiscreteSeries, NotUnitary };

struct UnitaryClassification {
  UnitaryKind kind = UnitaryKind::NotUnitary;
  int m = 0, r = 0, s = 0;
  /// Set when (c, h) is only reachable through a boundary reading of the discrete series.
  std::optional<std::string> boundary;
  Json to_json() const;
};

Rational minimal_central_charge(int m);
Rational minimal_weight(int m, int r, int s);

/// Continuum for c >= 1, h >= 0; otherwise searches c = c_m, h = h^m_{r,s} with 3 <= m <= m_max,
/// 1 <= s <= r < m. The point (0, 0) of m = 2 is reported as not unitary with a boundary flag.
UnitaryClassification classify_unitary(const Rational& c, const Rational& h, int m_max = 12);

}  // namespace voa::vir
