#pragma once

#include <optional>
#include <string>
#include <vector>

#include "voa/opers/oper.hpp"

namespace voa::hodge {

/// nabla = d + gamma dt on a free module with an adapted frame: F^p is spanned
/// by the basis columns whose degree is >= p.
struct FilteredConnection {
  ConnectionMatrix gamma;
  Matrix<Series> basis;
  std::vector<int> degrees;
  /// Precision used when inverting the frame; defaults to that of gamma.
  std::optional<int> window;

  std::size_t rank() const { return gamma.rows(); }
  /// F^p = span(e_1, ..., e_(n-p)) for p = 0..n-1, the flag of an oper in
  /// companion form.
  static FilteredConnection standard_flag(const ConnectionMatrix& gamma);
  std::vector<std::vector<Series>> frame(int p) const;
  Json to_json() const;
  /// {"gamma": rows, "basis": columns or "standard", "degrees": [...]}.
  static FilteredConnection from_json(const Json& j);
};

struct GriffithsReport {
  bool ok = true;
  int p = 0;
  std::size_t vector = 0;
  std::size_t offending = 0;
  std::string coefficient;
  Json to_json() const;
};

/// nabla F^p inside F^(p-1) for every p.
GriffithsReport griffiths_check(const FilteredConnection& fc);

struct StrictnessReport {
  bool strict = true;
  bool oper_type = false;
  std::optional<int> witness;
  std::string reason;
  /// Induced maps Gr^p -> Gr^(p-1), keyed by p.
  std::vector<std::pair<int, Matrix<Series>>> graded_maps;
  Json to_json() const;
};

/// Induced graded maps are square with unit determinant.
StrictnessReport strictness_check(const FilteredConnection& fc);

}  // namespace voa::hodge
