#include <doctest.h>

#include <random>

#include "voa/core/errors.hpp"
#include "voa/opers/miura.hpp"

using namespace voa;

namespace {

Series poly(std::vector<int> c, int start = 0) {
  std::vector<Rational> r(c.begin(), c.end());
  return Series(start, r);
}

Series random_poly(std::mt19937& rng, int start, int degree) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Rational> c;
  for (int k = start; k <= degree; ++k) c.push_back(d(rng));
  if (c.front() == 0) c.front() = 1;
  return Series(start, c);
}

bool matrices_agree(const Matrix<Series>& a, const Matrix<Series>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// Power-series solution of psi' = -A psi with psi(0) = init, A holomorphic.
std::vector<Series> horizontal_section(const ConnectionMatrix& a, const std::vector<Rational>& init, int order) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> c(n, std::vector<Rational>{});
  for (std::size_t i = 0; i < n; ++i) c[i].push_back(init[i]);
  for (int k = 0; k + 1 < order; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < n; ++j)
        for (int m = 0; m <= k; ++m) acc += a(i, j).coeff(m) * c[j][static_cast<std::size_t>(k - m)];
      c[i].push_back(-acc / (k + 1));
    }
  }
  std::vector<Series> out;
  for (auto& v : c) out.push_back(Series(0, v, order));
  return out;
}

// (d - chi_1)((d - chi_2)(...(d - chi_n) f)) evaluated from the right.
Series apply_factors(const std::vector<Series>& chis, Series f) {
  for (std::size_t i = chis.size(); i >= 1; --i) f = f.derivative() - chis[i - 1] * f;
  return f;
}

}  // namespace

TEST_CASE("oper shape check") {
  CHECK(oper_shape_check(companion_matrix({poly({1, 2}), poly({0, 0, 3})})).ok);
  ShapeReport zero = oper_shape_check(ConnectionMatrix(2, 2));
  CHECK_FALSE(zero.ok);
  CHECK(zero.witness == std::make_pair(std::size_t{1}, std::size_t{0}));
  ConnectionMatrix m = companion_matrix({Series(), Series(), Series()});
  m(2, 1) = Series::monomial(1, 1);
  ShapeReport r = oper_shape_check(m);
  CHECK_FALSE(r.ok);
  CHECK(r.witness == std::make_pair(std::size_t{2}, std::size_t{1}));
  m(2, 1) = poly({2, 1});
  CHECK(oper_shape_check(m).ok);
  m(2, 0) = poly({0, 1});
  r = oper_shape_check(m);
  CHECK_FALSE(r.ok);
  CHECK(r.witness == std::make_pair(std::size_t{2}, std::size_t{0}));
  CHECK_FALSE(oper_shape_check(ConnectionMatrix(2, 3)).ok);
}

TEST_CASE("gauge transformations") {
  ConnectionMatrix a = companion_matrix({poly({1, 1}), poly({0, 2})});
  CHECK(matrices_agree(gauge_transform(GaugeElement::identity(2), a), a));

  GaugeElement g(1, 1);
  g(0, 0) = Series::monomial(1, 1);
  ConnectionMatrix z(1, 1);
  ConnectionMatrix out = gauge_transform(g, z);
  CHECK(out(0, 0) == Series::monomial(-1, -1));
  CHECK(out(0, 0).exact());

  CHECK_THROWS_AS(gauge_transform(GaugeElement(2, 2), a), GaugeError);
  GaugeElement nonmono = GaugeElement::identity(2);
  nonmono(0, 0) = poly({1, 1});
  CHECK_THROWS_AS(gauge_transform(nonmono, a), PrecisionError);
  ConnectionMatrix ok = gauge_transform(nonmono, a, 8);
  CHECK(ok(0, 0).precision() <= 8);

  // left action on random triples
  std::mt19937 rng(7);
  for (std::size_t n : {2u, 3u}) {
    for (int trial = 0; trial < 4; ++trial) {
      GaugeElement x(n, n), y(n, n);
      ConnectionMatrix c(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          x(i, j) = random_poly(rng, 0, 2);
          y(i, j) = random_poly(rng, 0, 2);
          c(i, j) = random_poly(rng, 0, 3);
        }
      const int w = 8;
      ConnectionMatrix lhs = gauge_transform(x * y, c, w + 4);
      ConnectionMatrix rhs = gauge_transform(x, gauge_transform(y, c, w + 4), w + 4);
      Matrix<Series> lt = lhs.map([&](const Series& s) { return s.truncated(w); });
      Matrix<Series> rt = rhs.map([&](const Series& s) { return s.truncated(w); });
      CHECK(matrices_agree(lt, rt));
      for (std::size_t i = 0; i < n; ++i) CHECK(lt(i, i).precision() == w);
    }
  }
}

TEST_CASE("companion form") {
  // already companion
  std::vector<Series> row{poly({0, 1}), poly({3}), poly({1, 0, 1})};
  CompanionForm f = to_companion(companion_matrix(row));
  CHECK(matrices_agree(f.gauge, GaugeElement::identity(3)));
  for (std::size_t j = 0; j < 3; ++j) CHECK(f.first_row[j] == row[j]);

  // n = 2 by elimination: y'' = -(a + d) y' + (b - a d - d') y
  Series a = poly({1, 2}), b = poly({0, 1, 1}), d = poly({-1, 0, 3});
  ConnectionMatrix m{{a, b}, {Series(1), d}};
  f = to_companion(m);
  CHECK(f.op.q(1) == -(a + d));
  CHECK(f.op.q(2) == b - a * d - d.derivative());
  CHECK(matrices_agree(gauge_transform(f.gauge, m), companion_matrix(f.first_row)));

  std::mt19937 rng(11);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 3; ++trial) {
      ConnectionMatrix c(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (j + 1 >= i) c(i, j) = random_poly(rng, 0, 3);
      for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = Series(1);
      CompanionForm cf = to_companion(c);
      // unipotent upper triangular gauge
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) CHECK(cf.gauge(i, j) == Series(i == j ? 1 : 0));
      CHECK(matrices_agree(gauge_transform(cf.gauge, c), companion_matrix(cf.first_row)));
      // the last coordinate of every horizontal section is killed by the operator
      const int order = 12;
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<Rational> init(n, 0);
        init[s] = 1;
        Series y = horizontal_section(c, init, order)[n - 1];
        Series res = cf.op.apply(y);
        CHECK(res.is_zero());
        CHECK(res.precision() == order - static_cast<int>(n));
      }
    }
  }

  // a non-normalized unit subdiagonal is scaled away first
  ConnectionMatrix u{{poly({1}), poly({2})}, {poly({3}), poly({0, 1})}};
  CompanionForm cu = to_companion(u);
  CHECK(matrices_agree(gauge_transform(cu.gauge, u), companion_matrix(cu.first_row)));
  ConnectionMatrix v{{poly({1}), poly({2})}, {poly({1, 1}), poly({0, 1})}};
  CHECK_THROWS_AS(to_companion(v), PrecisionError);
  CompanionForm cv = to_companion(v, 10);
  CHECK(cv.op.precision() <= 10);
  CHECK_THROWS_AS(to_companion(ConnectionMatrix(2, 2)), OperShapeError);
}

TEST_CASE("operator basics") {
  MonicDiffOp op({poly({0}), Series::monomial(2, -2)});
  CHECK(op.coefficient(2) == Series(1));
  CHECK(op.coefficient(0) == Series::monomial(-2, -2));
  // t^2 is killed by d^2 - 2/t^2
  CHECK(op.apply(Series::monomial(1, 2)).is_zero());
  CHECK_THROWS_AS(MonicDiffOp({poly({1}), poly({0})}, true), OperShapeError);
  CHECK_NOTHROW(MonicDiffOp({Series(), poly({1})}, true));
  CHECK(MonicDiffOp::from_json(op.to_json()) == op);
  CHECK(op.to_string() == "d^2 - (2*t^(-2))");
}

TEST_CASE("Miura composition") {
  MonicDiffOp d2 = miura_compose({Series(), Series()});
  CHECK(d2 == MonicDiffOp({Series(), Series()}));
  MonicDiffOp op = miura_compose({Series::monomial(1, -1), Series::monomial(-1, -1)});
  CHECK(op.q(1).is_zero());
  CHECK(op.q(2) == Series::monomial(2, -2));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Series> chis{random_poly(rng, 0, 3), random_poly(rng, 0, 3), random_poly(rng, 0, 3)};
    std::vector<Series> f1{-chis[0], 1}, f2{-chis[1], 1}, f3{-chis[2], 1};
    auto left = compose_operators(compose_operators(f1, f2), f3);
    auto right = compose_operators(f1, compose_operators(f2, f3));
    MonicDiffOp composed = miura_compose(chis);
    CHECK(MonicDiffOp::from_coefficients(left) == composed);
    CHECK(MonicDiffOp::from_coefficients(right) == composed);
    Series f = random_poly(rng, 0, 8).truncated(8);
    CHECK(composed.apply(f) == apply_factors(chis, f));
    // trace condition
    Series trace = chis[0] + chis[1] + chis[2];
    CHECK(composed.q(1) == trace);
    chis[2] = chis[2] - trace;
    CHECK(miura_compose(chis).q(1).is_zero());
  }

  // the Miura connection reduces to the composed operator
  for (int trial = 0; trial < 4; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    std::vector<Series> chis;
    for (std::size_t i = 0; i < n; ++i) chis.push_back(random_poly(rng, trial == 3 ? -1 : 0, 3));
    CompanionForm cf = to_companion(miura_connection(chis));
    CHECK(cf.op == miura_compose(chis));
  }
}

TEST_CASE("Miura factorization") {
  std::vector<Series> z = miura_factor(MonicDiffOp({Series(), Series()}), {{0, 0}, {}}, 8);
  REQUIRE(z.size() == 2);
  CHECK(z[0].is_zero());
  CHECK(z[1].is_zero());
  CHECK(z[0].precision() == 8);

  MonicDiffOp op({Series(), Series::monomial(2, -2)});
  std::vector<Series> x = miura_factor(op, {{-1, -1}, {}}, 6);
  CHECK(x[0] == Series::monomial(1, -1));
  CHECK(x[1] == Series::monomial(-1, -1));
  // the other indicial root gives a different point of the fiber
  std::vector<Series> y = miura_factor(op, {{-1, -1}, {std::nullopt, Rational(2)}}, 6);
  CHECK(y[1] == Series::monomial(2, -1));
  CHECK(miura_compose(y).truncated(4) == op.truncated(4));
  CHECK_THROWS_AS(miura_factor(op, {{-1, -1}, {std::nullopt, Rational(1)}}, 6), BranchError);
  CHECK_THROWS_AS(miura_factor(op, {{0, 0}, {}}, 6), BranchError);
  CHECK_THROWS_AS(miura_factor(MonicDiffOp({Series(), Series::monomial(1, -3)}), {{-1, -1}, {}}, 6), BranchError);
  CHECK_THROWS_AS(miura_factor(op, {{-2, 0}, {}}, 6), BranchError);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Series> chis{random_poly(rng, 0, 4), random_poly(rng, 1, 5)};
    std::vector<Series> got = miura_factor(miura_compose(chis), {{0, 1}, {}}, 8);
    for (std::size_t i = 0; i < 2; ++i) CHECK(got[i] == chis[i].truncated(8));
  }
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Series> chis{random_poly(rng, 0, 3), random_poly(rng, 1, 4), random_poly(rng, 2, 5)};
    MonicDiffOp composed = miura_compose(chis);
    std::vector<Series> got = miura_factor(composed, {{0, 1, 2}, {}}, 8);
    for (std::size_t i = 0; i < 3; ++i) CHECK(got[i] == chis[i].truncated(8));
    CHECK(miura_compose(got).truncated(5) == composed.truncated(5));
  }
  // simple poles with prescribed residues
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Series> chis{random_poly(rng, -1, 3), random_poly(rng, -1, 3)};
    MiuraBranch br{{-1, -1}, {chis[0].coeff(-1), chis[1].coeff(-1)}};
    MonicDiffOp composed = miura_compose(chis);
    std::vector<Series> got = miura_factor(composed, br, 8);
    CHECK(miura_compose(got).truncated(6) == composed.truncated(6));
  }
  // inexact input runs out of window
  MonicDiffOp rough({Series(), Series(0, {1, 2}, 3)});
  CHECK_THROWS_AS(miura_factor(rough, {{0, 1}, {}}, 8), PrecisionError);
  CHECK_NOTHROW(miura_factor(rough, {{0, 1}, {}}, 3));
}
