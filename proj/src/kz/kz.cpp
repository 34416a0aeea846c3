#include "voa/kz/kz.hpp"

#include "voa/core/errors.hpp"

namespace voa::kz {

std::size_t KZSystem::space_dim() const {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

const SparseRationalMatrix& KZSystem::Omega(std::size_t i, std::size_t j) const {
  if (i == j) throw DomainError("Omega_ii is not part of the system");
  auto it = omega.find(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
  if (it == omega.end()) throw DomainError("missing Omega for slots " + std::to_string(i + 1) + "," + std::to_string(j + 1));
  return it->second;
}

Json KZSystem::to_json() const {
  Json j;
  j["dims"] = dims;
  j["kappa"] = voa::to_json(kappa);
  Json om = Json::array();
  for (const auto& [key, m] : omega) {
    Json e;
    e["i"] = key.first + 1;
    e["j"] = key.second + 1;
    e["matrix"] = voa::to_json(m);
    om.push_back(e);
  }
  j["omega"] = om;
  return j;
}

QMatrix sl2_irrep(const std::string& generator, int d) {
  if (d < 1) throw DomainError("irrep dimension must be positive");
  const std::size_t n = static_cast<std::size_t>(d);
  QMatrix m(n, n);
  // basis v_0..v_(d-1), h v_j = (d - 1 - 2j) v_j
  for (std::size_t j = 0; j < n; ++j) {
    const long jj = static_cast<long>(j);
    if (generator == "h") m(j, j) = d - 1 - 2 * jj;
    else if (generator == "f" && j + 1 < n) m(j + 1, j) = jj + 1;
    else if (generator == "e" && j > 0) m(j - 1, j) = d - jj;
  }
  if (generator != "e" && generator != "f" && generator != "h") throw DomainError("unknown sl2 generator " + generator);
  return m;
}

SparseRationalMatrix slot_operator(const std::vector<int>& dims, std::size_t slot, const QMatrix& x) {
  std::size_t total = 1, stride = 1;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    total *= static_cast<std::size_t>(dims[s]);
    if (s > slot) stride *= static_cast<std::size_t>(dims[s]);
  }
  const std::size_t d = static_cast<std::size_t>(dims.at(slot));
  SparseRationalMatrix out(total, total);
  for (std::size_t col = 0; col < total; ++col) {
    const std::size_t digit = (col / stride) % d;
    const std::size_t base = col - digit * stride;
    for (std::size_t r = 0; r < d; ++r)
      if (!is_zero(x(r, digit))) out.set(base + r * stride, col, x(r, digit));
  }
  return out;
}

KZSystem casimir_matrices(const std::vector<int>& dims, const Rational& kappa,
                          const std::shared_ptr<const lie::FiniteLieAlgebra>& algebra) {
  for (int d : dims)
    if (d < 1) throw DomainError("slot dimensions must be at least 1");
  if (algebra->name() != "sl2") throw DomainError("Casimir systems are built from sl2 irreps");
  KZSystem sys;
  sys.dims = dims;
  sys.kappa = kappa;
  const std::size_t g = algebra->dim();
  const QMatrix& dual = algebra->dual_basis();
  std::vector<std::vector<SparseRationalMatrix>> reps(dims.size());
  for (std::size_t s = 0; s < dims.size(); ++s)
    for (std::size_t a = 0; a < g; ++a)
      reps[s].push_back(slot_operator(dims, s, sl2_irrep(algebra->generator(a).name, dims[s])));
  for (std::size_t i = 0; i < dims.size(); ++i)
    for (std::size_t j = i + 1; j < dims.size(); ++j) {
      SparseRationalMatrix om(sys.space_dim(), sys.space_dim());
      for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
          if (!is_zero(dual(a, b))) om = om + dual(a, b) * (reps[i][a] * reps[j][b]);
      sys.omega.emplace(std::make_pair(i, j), std::move(om));
    }
  return sys;
}

Json FlatnessReport::to_json() const {
  Json j;
  j["flat"] = flat;
  j["checks"] = checks;
  if (!flat) {
    Json w = Json::array();
    for (auto s : witness) w.push_back(s + 1);
    j["witness"] = w;
    j["relation"] = relation;
  }
  return j;
}

namespace {

std::string pair_name(std::size_t i, std::size_t j) { return "O" + std::to_string(i + 1) + std::to_string(j + 1); }

}  // namespace

FlatnessReport flatness_check(const KZSystem& system) {
  FlatnessReport r;
  const std::size_t n = system.points();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        ++r.checks;
        const auto& oij = system.Omega(i, j);
        if (!commutator(oij, system.Omega(i, k) + system.Omega(j, k)).is_zero()) {
          r.flat = false;
          r.witness = {i, j, k};
          r.relation = "[" + pair_name(i, j) + ", " + pair_name(i, k) + " + " + pair_name(j, k) + "] != 0";
          return r;
        }
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          if (k == j || l == j) continue;
          ++r.checks;
          if (!commutator(system.Omega(i, j), system.Omega(k, l)).is_zero()) {
            r.flat = false;
            r.witness = {i, j, k, l};
            r.relation = "[" + pair_name(i, j) + ", " + pair_name(k, l) + "] != 0";
            return r;
          }
        }
  return r;
}

}  // namespace voa::kz
