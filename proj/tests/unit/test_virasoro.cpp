#include <doctest.h>

#include <random>

#include "voa/core/linalg.hpp"
#include "voa/virasoro/verma.hpp"

using namespace voa;
using namespace voa::vir;

namespace {

using Words = std::vector<int>;

// <v, L_{w1} ... L_{wk} v> by commuting the rightmost raising mode to the right.
Rational expectation(const Words& w, const Rational& c, const Rational& h) {
  if (w.empty()) return 1;
  if (w.back() > 0 || w.front() < 0) return 0;
  std::size_t p = w.size();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > 0) p = i;
  if (p == w.size()) {
    // no raising modes: leading L_0 acts on the left vacuum
    Words rest(w.begin() + 1, w.end());
    return h * expectation(rest, c, h);
  }
  const int a = w[p], b = w[p + 1];
  Words swapped = w;
  std::swap(swapped[p], swapped[p + 1]);
  Rational total = expectation(swapped, c, h);
  Words merged(w.begin(), w.begin() + static_cast<long>(p));
  merged.push_back(a + b);
  merged.insert(merged.end(), w.begin() + static_cast<long>(p) + 2, w.end());
  total += Rational(a - b) * expectation(merged, c, h);
  if (a + b == 0) {
    Words dropped(w.begin(), w.begin() + static_cast<long>(p));
    dropped.insert(dropped.end(), w.begin() + static_cast<long>(p) + 2, w.end());
    Rational aa = a;
    total += c * (aa * aa * aa - aa) / 12 * expectation(dropped, c, h);
  }
  return total;
}

Rational gram_oracle(const Partition& l, const Partition& m, const Rational& c, const Rational& h) {
  Words w(l.parts().rbegin(), l.parts().rend());
  for (int part : m.parts()) w.push_back(-part);
  return expectation(w, c, h);
}

Rational random_rational(std::mt19937& rng, int lo, int hi, int den) {
  std::uniform_int_distribution<int> num(lo * den, hi * den);
  return make_rational(num(rng), den);
}

}  // namespace

TEST_CASE("bracket examples and the Jacobi identity") {
  using V = VirasoroElement;
  CHECK(vir_bracket(V::L(2), V::L(-2)) == V::L(0, 4) + V::C(Rational(1, 2)));
  CHECK(vir_bracket(V::L(0), V::L(0)).is_zero());
  CHECK(vir_bracket(V::L(1), V::L(-1)) == V::L(0, 2));
  CHECK(vir_bracket(V::C(), V::L(3)).is_zero());
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      CHECK(vir_bracket(V::L(a), V::L(b)) == Rational(-1) * vir_bracket(V::L(b), V::L(a)));
      for (int c = -4; c <= 4; ++c) {
        auto x = V::L(a), y = V::L(b), z = V::L(c);
        auto j = vir_bracket(x, vir_bracket(y, z)) + vir_bracket(y, vir_bracket(z, x)) +
                 vir_bracket(z, vir_bracket(x, y));
        CHECK(j.is_zero());
      }
    }
  CHECK((V::L(2, 4) + V::C(Rational(1, 2))).to_string() == "4*L_2 + 1/2*C");
}

TEST_CASE("action on Verma vectors") {
  using V = VirasoroElement;
  VermaParameters<Rational> p{Rational(7, 3), Rational(5, 2)};
  auto one = [](std::vector<int> parts) { return VermaVector<Rational>{{Partition(parts), Rational(1)}}; };
  auto r = act(V::L(1), one({1}), p);
  CHECK(r == VermaVector<Rational>{{Partition(), 2 * p.h}});
  CHECK(act(V::L(5), one({}), p).empty());
  auto l0 = act(V::L(0), one({2, 1}), p);
  CHECK(l0 == VermaVector<Rational>{{Partition({2, 1}), p.h + 3}});
  // L_{-1} L_{-2} v = L_{-2} L_{-1} v + L_{-3} v
  auto s = act(V::L(-1), one({2}), p);
  CHECK(s == VermaVector<Rational>{{Partition({2, 1}), 1}, {Partition({3}), 1}});
  // central element acts by c
  auto cv = act(V::C(3), one({1}), p);
  CHECK(cv == VermaVector<Rational>{{Partition({1}), 3 * p.c}});
}

TEST_CASE("Gram matrices agree with the commutation oracle") {
  CHECK(gram_matrix(VermaParameters<Rational>{1, 1}, 0) == QMatrix{{1}});
  auto c = MPoly::variable(2, 0), h = MPoly::variable(2, 1);
  auto g1 = gram_matrix_symbolic(1);
  CHECK(g1(0, 0) == Rational(2) * h);
  auto g2 = gram_matrix_symbolic(2);
  CHECK(g2(0, 0) == Rational(4) * h + Rational(1, 2) * c);
  CHECK(g2(0, 1) == Rational(6) * h);
  CHECK(g2(1, 1) == Rational(8) * h * h + Rational(4) * h);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 3; ++trial) {
    Rational cc = random_rational(rng, -3, 3, 7), hh = random_rational(rng, -3, 3, 5);
    for (int N = 0; N <= 5; ++N) {
      auto basis = partitions_of(N);
      auto g = gram_matrix(VermaParameters<Rational>{cc, hh}, N);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          CHECK(g(i, j) == gram_oracle(basis[i], basis[j], cc, hh));
          CHECK(g(i, j) == g(j, i));
        }
    }
  }
}

TEST_CASE("Kac determinant zeros") {
  // c = 13 - 6(tau + 1/tau), h_{r,s} = ((r^2-1) tau + (s^2-1)/tau)/4 - (rs - 1)/2
  for (Rational tau : {Rational(2, 3), Rational(5, 2), Rational(-3, 7)}) {
    Rational c = 13 - 6 * (tau + 1 / tau);
    for (int N = 1; N <= 5; ++N)
      for (int r = 1; r <= N; ++r)
        for (int s = 1; r * s <= N; ++s) {
          Rational h = (Rational(r * r - 1) * tau + Rational(s * s - 1) / tau) / 4 - Rational(r * s - 1, 2);
          CHECK(det_exact(gram_matrix(VermaParameters<Rational>{c, h}, N)) == 0);
        }
  }
  // h-degree of the level-N determinant is sum_{rs <= N} p(N - rs)
  auto counts = partition_counts(6);
  for (int N = 1; N <= 4; ++N) {
    long long expect = 0;
    for (int r = 1; r <= N; ++r)
      for (int s = 1; r * s <= N; ++s) expect += counts[static_cast<std::size_t>(N - r * s)];
    Poly d = det_exact(gram_matrix(VermaParameters<Poly>{Poly(Rational(3, 7)), Poly::t()}, N));
    CHECK(d.degree() == expect);
  }
}

TEST_CASE("minimal models and classification") {
  CHECK(minimal_central_charge(3) == Rational(1, 2));
  CHECK(minimal_weight(3, 2, 2) == Rational(1, 16));
  auto a = classify_unitary(2, Rational(1, 3));
  CHECK(a.kind == UnitaryKind::Continuum);
  auto b = classify_unitary(Rational(1, 2), Rational(1, 16));
  CHECK(b.kind == UnitaryKind::DiscreteSeries);
  CHECK((b.m == 3 && b.r == 2 && b.s == 2));
  auto z = classify_unitary(Rational(1, 2), 0);
  CHECK((z.kind == UnitaryKind::DiscreteSeries && z.m == 3 && z.r == 1 && z.s == 1));
  CHECK(classify_unitary(Rational(1, 2), Rational(1, 5)).kind == UnitaryKind::NotUnitary);
  CHECK(classify_unitary(2, -1).kind == UnitaryKind::NotUnitary);
  auto edge = classify_unitary(0, 0);
  CHECK(edge.kind == UnitaryKind::NotUnitary);
  CHECK(edge.boundary.has_value());
  auto far = classify_unitary(minimal_central_charge(20), 0, 12);
  CHECK(far.boundary.has_value());
  CHECK(classify_unitary(minimal_central_charge(20), 0, 25).kind == UnitaryKind::DiscreteSeries);
}

TEST_CASE("positivity for c >= 1 and h > 0") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    Rational c = 1 + random_rational(rng, 0, 4, 3), h = random_rational(rng, 0, 3, 4) + Rational(1, 10);
    for (int N = 1; N <= 5; ++N) CHECK(positive_definite(gram_matrix(VermaParameters<Rational>{c, h}, N)));
  }
  // c = 1/2, h = 1/16: nonnegative determinants, first null vector at level 2
  for (int N = 0; N <= 4; ++N) {
    Rational d = det_exact(gram_matrix(VermaParameters<Rational>{Rational(1, 2), Rational(1, 16)}, N));
    CHECK(d >= 0);
    CHECK((d == 0) == (N >= 2));
  }
}

TEST_CASE("Jantzen filtration") {
  auto r0 = jantzen_filtration(1, 0, 1);
  CHECK(r0.ord_det == 1);
  CHECK(r0.dims == std::vector<int>{1});
  auto empty = jantzen_filtration(5, 3, 0);
  CHECK(empty.ord_det == 0);
  CHECK(empty.dims.empty());
  for (int N = 1; N <= 3; ++N) {
    auto g = jantzen_filtration(1, Rational(1, 5), N);
    CHECK(g.ord_det == 0);
    CHECK(g.dims.empty());
  }
  for (auto [c, h] : std::vector<std::pair<Rational, Rational>>{{1, 0}, {Rational(1, 2), 0}, {Rational(25, 2), -1},
                                                                {Rational(1, 2), Rational(1, 16)}}) {
    for (int N = 1; N <= 4; ++N) {
      auto rep = jantzen_filtration(c, h, N);
      Poly d = det_exact(deformed_gram_matrix(c, h, N));
      int sum = 0;
      for (int x : rep.dims) sum += x;
      CHECK(sum == d.valuation());
      CHECK(sum == rep.ord_det);
      for (std::size_t k = 1; k < rep.dims.size(); ++k) CHECK(rep.dims[k] <= rep.dims[k - 1]);
      // M(1) is the radical of the undeformed form
      auto g = gram_matrix(VermaParameters<Rational>{c, h}, N);
      int radical = static_cast<int>(g.rows()) - static_cast<int>(rank(g));
      CHECK((rep.dims.empty() ? 0 : rep.dims[0]) == radical);
    }
  }
}

TEST_CASE("graded character") {
  CHECK(graded_character(4) == std::vector<long long>{1, 1, 2, 3, 5});
  CHECK(graded_character(0) == std::vector<long long>{1});
  auto ref = colored_partition_counts(8, 1);
  CHECK(graded_character(8) == ref);
}
