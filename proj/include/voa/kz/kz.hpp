#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "voa/core/json_io.hpp"
#include "voa/core/sparse_matrix.hpp"
#include "voa/lie/algebra.hpp"

namespace voa::kz {

/// Matrices Omega_ij (i < j) on W = V_1 (x) ... (x) V_n, with level shift kappa.
struct KZSystem {
  std::vector<int> dims;
  Rational kappa = 4;
  std::map<std::pair<std::size_t, std::size_t>, SparseRationalMatrix> omega;

  std::size_t points() const { return dims.size(); }
  std::size_t space_dim() const;
  /// Omega_ij = Omega_ji; zero-based slots.
  const SparseRationalMatrix& Omega(std::size_t i, std::size_t j) const;
  Json to_json() const;
};

/// Matrix of a generator (named e, f or h) in the sl2 irrep of dimension d.
QMatrix sl2_irrep(const std::string& generator, int d);

/// Operator acting as x on slot `slot` of the tensor product and trivially elsewhere.
SparseRationalMatrix slot_operator(const std::vector<int>& dims, std::size_t slot, const QMatrix& x);

/// Omega_ij = sum_a J^a_(i) J_a(j) for the dual bases of the normalized form.
KZSystem casimir_matrices(const std::vector<int>& dims, const Rational& kappa = 4,
                          const std::shared_ptr<const lie::FiniteLieAlgebra>& algebra = lie::FiniteLieAlgebra::sl2());

struct FlatnessReport {
  bool flat = true;
  std::size_t checks = 0;
  /// Slots of the first failing relation: (i, j, k) or (i, j, k, l).
  std::vector<std::size_t> witness;
  std::string relation;
  Json to_json() const;
};

/// Infinitesimal braid relations [O_ij, O_ik + O_jk] = 0 and [O_ij, O_kl] = 0.
FlatnessReport flatness_check(const KZSystem& system);

}  // namespace voa::kz
