#pragma once

#include <vector>

#include "voa/lie/pbw.hpp"

namespace voa::lie {

/// F(x, y) = pi(sigma(x) y).
MPoly shapovalov_form(const PBWElement& x, const PBWElement& y);

/// PBW basis of U(g_-) of weight -beta: sorted multisets of lowering generators.
std::vector<PBWElement> lowering_basis(const AlgebraPtr& alg, const std::vector<int>& beta);

/// Gram matrix of F on lowering_basis(beta).
Matrix<MPoly> shapovalov_matrix(const AlgebraPtr& alg, const std::vector<int>& beta);

/// det F on the canonical PBW basis of weight -beta; 1 for an empty weight space.
MPoly shapovalov_determinant(const AlgebraPtr& alg, const std::vector<int>& beta);

/// chi_mu(z) = pi(z)(mu), the scalar by which central z acts on the highest-weight
/// vector of weight mu. Throws CentralityError for non-central z.
Rational infinitesimal_character(const WeightVector& mu, const PBWElement& z);

}  // namespace voa::lie
