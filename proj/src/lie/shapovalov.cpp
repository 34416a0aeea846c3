#include "voa/lie/shapovalov.hpp"

#include "voa/core/errors.hpp"
#include "voa/core/linalg.hpp"

namespace voa::lie {

MPoly shapovalov_form(const PBWElement& x, const PBWElement& y) {
  MPoly f = hc_project(sigma(x) * y);
  if (f.is_zero()) return MPoly::zero(x.algebra()->rank());
  return f;
}

std::vector<PBWElement> lowering_basis(const AlgebraPtr& alg, const std::vector<int>& beta) {
  std::vector<std::size_t> lowering;
  for (std::size_t p = 0; p < alg->dim(); ++p)
    for (std::size_t i = 0; i < alg->dim(); ++i)
      if (alg->pbw_position(i) == p && alg->generator(i).kind == GeneratorKind::Lowering) lowering.push_back(i);
  const std::size_t rdim = alg->dim() ? alg->generator(0).root.size() : 0;
  if (beta.size() != rdim) throw ShapeError("beta must have one entry per simple root");
  for (int b : beta)
    if (b < 0) throw DomainError("beta must be a nonnegative combination of simple roots");

  std::vector<PBWElement> out;
  PBWElement::Word word;
  std::vector<int> rest = beta;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    bool done = true;
    for (int b : rest) done = done && b == 0;
    if (done) {
      out.push_back(PBWElement::word(alg, word));
      return;
    }
    for (std::size_t k = from; k < lowering.size(); ++k) {
      const auto& root = alg->generator(lowering[k]).root;
      bool fits = true;
      for (std::size_t r = 0; r < rdim; ++r) fits = fits && root[r] <= rest[r];
      bool nonzero = false;
      for (int v : root) nonzero = nonzero || v != 0;
      if (!fits || !nonzero) continue;
      for (std::size_t r = 0; r < rdim; ++r) rest[r] -= root[r];
      word.push_back(lowering[k]);
      self(self, k);
      word.pop_back();
      for (std::size_t r = 0; r < rdim; ++r) rest[r] += root[r];
    }
  };
  rec(rec, 0);
  return out;
}

Matrix<MPoly> shapovalov_matrix(const AlgebraPtr& alg, const std::vector<int>& beta) {
  auto basis = lowering_basis(alg, beta);
  Matrix<MPoly> m(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      m(i, j) = shapovalov_form(basis[i], basis[j]);
      m(j, i) = m(i, j);
    }
  return m;
}

MPoly shapovalov_determinant(const AlgebraPtr& alg, const std::vector<int>& beta) {
  MPoly d = det_expand(shapovalov_matrix(alg, beta));
  MPoly out = MPoly::zero(alg->rank());
  out += d;
  return out;
}

Rational infinitesimal_character(const WeightVector& mu, const PBWElement& z) {
  if (mu.size() != z.algebra()->rank()) throw ShapeError("weight must have one value per Cartan generator");
  if (!is_central(z)) throw CentralityError("element does not commute with every generator");
  return evaluate_at(hc_project(z), mu);
}

}  // namespace voa::lie
