#include <doctest.h>

#include <random>

#include "voa/core/linalg.hpp"
#include "voa/lie/shapovalov.hpp"

using namespace voa;
using namespace voa::lie;

namespace {

QMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

// Defining representation of sl_n on C^n, generator by generator.
std::vector<QMatrix> defining_rep(const FiniteLieAlgebra& alg) {
  std::vector<QMatrix> out;
  if (alg.name() == "sl2") {
    out = {unit_matrix(2, 1, 0), unit_matrix(2, 0, 0) - unit_matrix(2, 1, 1), unit_matrix(2, 0, 1)};
  } else {
    out = {unit_matrix(3, 1, 0), unit_matrix(3, 2, 1), unit_matrix(3, 2, 0),
           unit_matrix(3, 0, 0) - unit_matrix(3, 1, 1), unit_matrix(3, 1, 1) - unit_matrix(3, 2, 2),
           unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2)};
  }
  return out;
}

// Irreducible sl2 module of dimension m+1 in the basis f^k v.
std::vector<QMatrix> sl2_irrep(int m) {
  std::size_t d = static_cast<std::size_t>(m + 1);
  QMatrix f(d, d), h(d, d), e(d, d);
  for (int k = 0; k <= m; ++k) {
    std::size_t kk = static_cast<std::size_t>(k);
    h(kk, kk) = m - 2 * k;
    if (k < m) f(kk + 1, kk) = 1;
    if (k > 0) e(kk - 1, kk) = k * (m - k + 1);
  }
  return {f, h, e};
}

QMatrix act(const PBWElement& x, const std::vector<QMatrix>& rep) {
  std::size_t d = rep.front().rows();
  QMatrix out(d, d);
  for (const auto& [w, c] : x.terms()) {
    QMatrix p = QMatrix::identity(d);
    for (std::size_t g : w) p = p * rep[g];
    out += c * p;
  }
  return out;
}

QMatrix act_word(const PBWElement::Word& w, const std::vector<QMatrix>& rep) {
  QMatrix p = QMatrix::identity(rep.front().rows());
  for (std::size_t g : w) p = p * rep[g];
  return p;
}

// Action on the Verma module M(lambda) of sl2 truncated at f^K v; exact on f^k v for k + (#e) <= K.
std::vector<QMatrix> sl2_verma(const Rational& lambda, int K) {
  std::size_t d = static_cast<std::size_t>(K + 1);
  QMatrix f(d, d), h(d, d), e(d, d);
  for (int k = 0; k <= K; ++k) {
    std::size_t kk = static_cast<std::size_t>(k);
    h(kk, kk) = lambda - 2 * k;
    if (k < K) f(kk + 1, kk) = 1;
    if (k > 0) e(kk - 1, kk) = Rational(k) * (lambda - k + 1);
  }
  return {f, h, e};
}

void check_rep(const FiniteLieAlgebra& alg, const std::vector<QMatrix>& rep) {
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      QMatrix rhs(rep[0].rows(), rep[0].cols());
      for (std::size_t k = 0; k < alg.dim(); ++k) rhs += alg.bracket(i, j)[k] * rep[k];
      REQUIRE(commutator(rep[i], rep[j]) == rhs);
    }
}

}  // namespace

TEST_CASE("builtin tables pass validation and match the matrix realizations") {
  auto sl2 = FiniteLieAlgebra::sl2();
  auto sl3 = FiniteLieAlgebra::sl3();
  check_rep(*sl2, defining_rep(*sl2));
  check_rep(*sl3, defining_rep(*sl3));
  for (int m = 0; m <= 4; ++m) check_rep(*sl2, sl2_irrep(m));
  CHECK(sl2->dual_coxeter() == 2);
  CHECK(sl3->dual_coxeter() == 3);
  CHECK(sl2->rho() == QVector{1});
  CHECK(sl3->rho() == QVector{1, 1});
  auto again = FiniteLieAlgebra::from_json(sl3->to_json());
  CHECK(again->to_json() == sl3->to_json());
}

TEST_CASE("corrupted tables are rejected") {
  Json j = FiniteLieAlgebra::sl2()->to_json();
  for (auto& b : j["brackets"])
    if (b[0] == "h" && b[1] == "e") b[2]["e"] = "3";
  CHECK_THROWS_AS(FiniteLieAlgebra::from_json(j), DomainError);
}

TEST_CASE("pbw_normalize examples") {
  auto g = FiniteLieAlgebra::sl2();
  std::size_t f = g->index_of("f"), h = g->index_of("h"), e = g->index_of("e");
  auto ef = pbw_normalize({{g, e}, {g, f}});
  CHECK(ef == PBWElement::word(g, {f, e}) + PBWElement::generator(g, h));
  CHECK(ef.to_string() == "f*e + h");
  CHECK(PBWElement::word(g, {h}).terms().size() == 1);
  CHECK(PBWElement::word(g, {e, e}).to_string() == "e^2");
  auto other = FiniteLieAlgebra::sl3();
  CHECK_THROWS_AS(pbw_normalize({{g, e}, {other, 0}}), DomainError);
  // idempotent on normal words
  auto fhe = PBWElement::word(g, {f, h, e});
  CHECK(PBWElement::word(g, fhe.terms().begin()->first) == fhe);
}

TEST_CASE("normalization agrees with matrix representations and is multiplicative") {
  std::mt19937 rng(7);
  for (auto g : {FiniteLieAlgebra::sl2(), FiniteLieAlgebra::sl3()}) {
    std::vector<std::vector<QMatrix>> reps = {defining_rep(*g)};
    if (g->name() == "sl2")
      for (int m = 2; m <= 4; ++m) reps.push_back(sl2_irrep(m));
    std::uniform_int_distribution<std::size_t> gen(0, g->dim() - 1);
    std::uniform_int_distribution<int> len(0, 6);
    for (int trial = 0; trial < 40; ++trial) {
      PBWElement::Word u, v;
      for (int k = len(rng); k > 0; --k) u.push_back(gen(rng));
      for (int k = len(rng); k > 0; --k) v.push_back(gen(rng));
      PBWElement::Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      auto nu = PBWElement::word(g, u), nv = PBWElement::word(g, v), nuv = PBWElement::word(g, uv);
      CHECK(nuv == nu * nv);
      for (const auto& [w, c] : nuv.terms())
        for (std::size_t k = 0; k + 1 < w.size(); ++k) CHECK(g->pbw_position(w[k]) <= g->pbw_position(w[k + 1]));
      for (const auto& rep : reps) CHECK(act(nuv, rep) == act_word(uv, rep));
    }
  }
}

TEST_CASE("hc_project and Shapovalov form examples") {
  auto g = FiniteLieAlgebra::sl2();
  auto h = MPoly::variable(1, 0);
  auto x = PBWElement::parse(g, "h h") + PBWElement::parse(g, "f e");
  CHECK(hc_project(x) == h * h);
  CHECK(hc_project(PBWElement::scalar(g, 1)) == MPoly(1));
  CHECK(hc_project(PBWElement::parse(g, "f h e")).is_zero());
  CHECK(hc_project(PBWElement::parse(g, "e f")) == h);
  auto f = PBWElement::parse(g, "f");
  CHECK(shapovalov_form(f, f) == h);
  CHECK(shapovalov_form(PBWElement::scalar(g, 1), PBWElement::scalar(g, 1)) == MPoly(1));
  CHECK(shapovalov_form(f, PBWElement::parse(g, "h")).is_zero());
}

TEST_CASE("Shapovalov determinants of sl2 match the Verma module oracle") {
  auto g = FiniteLieAlgebra::sl2();
  auto h = MPoly::variable(1, 0);
  CHECK(shapovalov_determinant(g, {1}) == h);
  CHECK(shapovalov_determinant(g, {0}) == MPoly(1));
  for (int k = 0; k <= 4; ++k) {
    MPoly det = shapovalov_determinant(g, {k});
    for (int lam = -4; lam <= 4; ++lam) {
      // coefficient of v in e^k f^k v
      auto rep = sl2_verma(lam, k);
      PBWElement::Word w(static_cast<std::size_t>(k), g->index_of("e"));
      w.insert(w.end(), static_cast<std::size_t>(k), g->index_of("f"));
      Rational oracle = act_word(w, rep)(0, 0);
      CHECK(evaluate_at(det, {Rational(lam)}) == oracle);
    }
  }
  // e^2 f^2 v = 2 lambda (lambda - 1) v
  CHECK(shapovalov_determinant(g, {2}) == Rational(2) * h * h - Rational(2) * h);
}

TEST_CASE("sl3 Shapovalov matrices match highest-weight vectors of finite modules") {
  auto g = FiniteLieAlgebra::sl3();
  auto rep = defining_rep(*g);
  // C^3 has highest weight (1, 0) with highest vector e_1; its dual has (0, 1) with vector e_3.
  std::vector<std::vector<QMatrix>> reps;
  std::vector<std::size_t> hw_index;
  std::vector<WeightVector> hw;
  reps.push_back(rep);
  hw_index.push_back(0);
  hw.push_back({1, 0});
  std::vector<QMatrix> dual;
  for (const auto& m : rep) dual.push_back(Rational(-1) * m.transpose());
  reps.push_back(dual);
  hw_index.push_back(2);
  hw.push_back({0, 1});
  std::vector<QMatrix> adj;
  for (std::size_t i = 0; i < g->dim(); ++i) adj.push_back(g->ad(i));
  reps.push_back(adj);
  hw_index.push_back(g->index_of("e3"));
  hw.push_back({1, 1});
  for (const auto& beta : std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}) {
    auto basis = lowering_basis(g, beta);
    auto F = shapovalov_matrix(g, beta);
    for (std::size_t r = 0; r < reps.size(); ++r) {
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          QMatrix m = act(sigma(basis[i]) * basis[j], reps[r]);
          CHECK(evaluate_at(F(i, j), hw[r]) == m(hw_index[r], hw_index[r]));
        }
    }
  }
  CHECK(lowering_basis(g, {1, 1}).size() == 2);
  CHECK(lowering_basis(g, {2, 1}).size() == 2);
}

TEST_CASE("contravariance and graded orthogonality") {
  auto g = FiniteLieAlgebra::sl2();
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> gen(0, 2);
  std::uniform_int_distribution<int> len(0, 3);
  auto random_word = [&] {
    PBWElement::Word w;
    for (int k = len(rng); k > 0; --k) w.push_back(gen(rng));
    return PBWElement::word(g, w);
  };
  for (int trial = 0; trial < 40; ++trial) {
    auto x = random_word(), y = random_word(), z = random_word();
    CHECK(shapovalov_form(sigma(z) * x, y) == shapovalov_form(x, z * y));
    CHECK(shapovalov_form(x, y) == shapovalov_form(y, x));
  }
  std::vector<PBWElement> all;
  std::vector<int> wt;
  for (int k = 0; k <= 3; ++k)
    for (const auto& b : lowering_basis(g, {k})) {
      all.push_back(b);
      wt.push_back(k);
    }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      if (wt[i] != wt[j]) CHECK(shapovalov_form(all[i], all[j]).is_zero());
}

TEST_CASE("infinitesimal characters of the Casimir") {
  auto g = FiniteLieAlgebra::sl2();
  auto omega = casimir(g);
  CHECK(omega == Rational(1, 2) * PBWElement::parse(g, "h h") + PBWElement::parse(g, "h") +
                     Rational(2) * PBWElement::parse(g, "f e"));
  CHECK(is_central(omega));
  for (int m = -5; m <= 5; ++m) {
    Rational mm = m;
    Rational expect = mm * mm / 2 + mm;
    CHECK(infinitesimal_character({mm}, omega) == expect);
    CHECK(infinitesimal_character({mm}, omega) == infinitesimal_character({-mm - 2}, omega));
    // Verma module oracle on the highest-weight vector
    CHECK(act(omega, sl2_verma(mm, 2))(0, 0) == expect);
    // rho-shifted map is invariant under the linear reflection
    auto hc = harish_chandra(omega);
    CHECK(evaluate_at(hc, {mm}) == evaluate_at(hc, {-mm}));
  }
  CHECK(infinitesimal_character({0}, PBWElement::scalar(g, 1)) == 1);
  CHECK_THROWS_AS(infinitesimal_character({1}, PBWElement::parse(g, "h")), CentralityError);
  auto g3 = FiniteLieAlgebra::sl3();
  auto omega3 = casimir(g3);
  CHECK(is_central(omega3));
  // adjoint Casimir eigenvalue 2 h^vee = 6 at highest weight (1,1)
  CHECK(infinitesimal_character({1, 1}, omega3) == 6);
}
