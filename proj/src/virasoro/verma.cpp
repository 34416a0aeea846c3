#include "voa/virasoro/verma.hpp"

#include <mutex>

#include "voa/core/errors.hpp"
#include "voa/core/linalg.hpp"
#include "voa/core/parallel.hpp"

namespace voa::vir {

namespace {

const MPoly& var_c() {
  static const MPoly c = MPoly::variable(2, 0);
  return c;
}
const MPoly& var_h() {
  static const MPoly h = MPoly::variable(2, 1);
  return h;
}

void accumulate(SymbolicVector& into, const Partition& b, const MPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

void accumulate(SymbolicVector& into, const SymbolicVector& v, const MPoly& scale) {
  for (const auto& [b, c] : v) accumulate(into, b, scale * c);
}

SymbolicVector act_mode_vector(int n, const SymbolicVector& v) {
  SymbolicVector out;
  for (const auto& [b, c] : v) accumulate(out, act_mode_symbolic(n, b), c);
  return out;
}

SymbolicVector compute_mode(int n, const Partition& basis) {
  SymbolicVector out;
  if (basis.empty()) {
    if (n == 0)
      out.emplace(basis, var_h());
    else if (n < 0)
      out.emplace(Partition({-n}), MPoly(1));
    return out;
  }
  const int a = basis.parts().front();
  if (n < 0 && -n >= a) {
    out.emplace(basis.with_part(-n), MPoly(1));
    return out;
  }
  // L_n L_{-a} w = L_{-a} L_n w + (n + a) L_{n-a} w + delta_{n,a} (n^3 - n)/12 c w
  const Partition rest = basis.without_part(a);
  out = act_mode_vector(-a, act_mode_symbolic(n, rest));
  if (n + a != 0) accumulate(out, act_mode_symbolic(n - a, rest), MPoly(Rational(n + a)));
  if (n == a) {
    Rational nn = n;
    accumulate(out, rest, var_c() * ((nn * nn * nn - nn) / 12));
  }
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const SymbolicVector& act_mode_symbolic(int n, const Partition& basis) {
  static std::map<std::pair<int, Partition>, SymbolicVector> cache;
  const auto key = std::make_pair(n, basis);
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SymbolicVector value = compute_mode(n, basis);
  std::lock_guard lock(cache_mutex());
  return cache.try_emplace(key, std::move(value)).first->second;
}

SymbolicVector act_symbolic(const VirasoroElement& x, const SymbolicVector& v) {
  SymbolicVector out;
  for (const auto& [n, a] : x.modes) accumulate(out, act_mode_vector(n, v), MPoly(a));
  if (!voa::is_zero(x.central)) accumulate(out, v, var_c() * x.central);
  return out;
}

Matrix<MPoly> gram_matrix_symbolic(int N) {
  if (N < 0) throw DomainError("level must be nonnegative");
  static std::map<int, Matrix<MPoly>> cache;
  static std::mutex m;
  {
    std::lock_guard lock(m);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  const auto basis = partitions_of(N);
  Matrix<MPoly> g(basis.size(), basis.size());
  parallel_for(basis.size(), [&](std::size_t j) {
    for (std::size_t i = 0; i <= j; ++i) {
      // (L_{-l} v, L_{-m} v) = coefficient of v in L_{lk} ... L_{l1} L_{-m} v
      SymbolicVector y{{basis[j], MPoly(1)}};
      for (int part : basis[i].parts()) y = act_mode_vector(part, y);
      auto it = y.find(Partition{});
      MPoly entry = it == y.end() ? MPoly::zero(2) : it->second;
      g(i, j) = entry;
      g(j, i) = entry;
    }
  });
  std::lock_guard lock(m);
  return cache.try_emplace(N, std::move(g)).first->second;
}

Matrix<Poly> deformed_gram_matrix(const Rational& c, const Rational& h, int N) {
  return gram_matrix(VermaParameters<Poly>{Poly(c), Poly(h) + Poly::t()}, N);
}

JantzenReport jantzen_filtration(const Rational& c, const Rational& h, int N) {
  JantzenReport r;
  r.level = N;
  Matrix<Poly> g = deformed_gram_matrix(c, h, N);
  try {
    r.valuations = t_valuations(g);
  } catch (const DegenerateInputError&) {
    throw DegenerateInputError("deformed Gram determinant vanishes identically; perturb c instead");
  }
  int top = 0;
  for (int v : r.valuations) {
    r.ord_det += v;
    top = std::max(top, v);
  }
  for (int m = 1; m <= top; ++m) {
    int count = 0;
    for (int v : r.valuations) count += v >= m ? 1 : 0;
    r.dims.push_back(count);
  }
  return r;
}

Json JantzenReport::to_json() const {
  return Json{{"level", level}, {"jantzen", dims}, {"ord_t_det", ord_det}, {"valuations", valuations}};
}

std::vector<long long> graded_character(int n_max) {
  if (n_max < 0) throw DomainError("level must be nonnegative");
  std::vector<long long> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(static_cast<long long>(partitions_of(n).size()));
  return out;
}

Rational minimal_central_charge(int m) { return Rational(1) - Rational(6) / (m * (m + 1)); }

Rational minimal_weight(int m, int r, int s) {
  Rational a = r * (m + 1) - s * m;
  return (a * a - 1) / (4 * m * (m + 1));
}

UnitaryClassification classify_unitary(const Rational& c, const Rational& h, int m_max) {
  UnitaryClassification out;
  if (c >= 1) {
    out.kind = h >= 0 ? UnitaryKind::Continuum : UnitaryKind::NotUnitary;
    return out;
  }
  for (int m = 3; m <= m_max; ++m) {
    if (c != minimal_central_charge(m)) continue;
    for (int r = 1; r < m; ++r)
      for (int s = 1; s <= r; ++s)
        if (h == minimal_weight(m, r, s)) {
          out.kind = UnitaryKind::DiscreteSeries;
          out.m = m;
          out.r = r;
          out.s = s;
          return out;
        }
    return out;
  }
  if (voa::is_zero(c) && voa::is_zero(h))
    out.boundary = "c = c_2 = 0 and h = h^2_{1,1} = 0 sit on the m = 2 edge of the discrete series";
  else if (c > 0) {
    // c = c_m beyond the search bound: m(m + 1) = 6 / (1 - c)
    Rational prod = Rational(6) / (Rational(1) - c);
    if (is_integer(prod)) {
      long q = prod.get_num().get_si();
      long m = 1;
      while (m * (m + 1) < q) ++m;
      if (m * (m + 1) == q)
        out.boundary = "c = c_" + std::to_string(m) + " lies beyond m_max = " + std::to_string(m_max);
    }
  }
  return out;
}

Json UnitaryClassification::to_json() const {
  Json j;
  switch (kind) {
    case UnitaryKind::Continuum: j["kind"] = "continuum"; break;
    case UnitaryKind::DiscreteSeries: j["kind"] = "discrete-series"; break;
    case UnitaryKind::NotUnitary: j["kind"] = "not-unitary"; break;
  }
  if (kind == UnitaryKind::DiscreteSeries) {
    j["m"] = m;
    j["r"] = r;
    j["s"] = s;
  }
  j["boundary"] = boundary ? Json(*boundary) : Json(nullptr);
  return j;
}

}  // namespace voa::vir
