#pragma once

#include <optional>
#include <vector>

#include "voa/opers/oper.hpp"

namespace voa {

/// (d - chi_1)(d - chi_2)...(d - chi_n), chi_1 leftmost.
MonicDiffOp miura_compose(const std::vector<Series>& chis);

/// d - (diag(chi) + subdiagonal 1).
ConnectionMatrix miura_connection(const std::vector<Series>& chis);

struct MiuraBranch {
  /// exponents[i] bounds the valuation of chi_i from below; only -1 and
  /// nonnegative values are supported.
  std::vector<int> exponents;
  /// Residues (coefficient of 1/t) for factors with exponent -1; when absent
  /// the smallest admissible root of the indicial polynomial is used.
  std::vector<std::optional<Rational>> residues;
};

/// Splits op into first-order factors on the branch, returning chi_1..chi_n
/// truncated to O(t^window).
std::vector<Series> miura_factor(const MonicDiffOp& op, const MiuraBranch& branch, int window);

}  // namespace voa
