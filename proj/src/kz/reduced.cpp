#include "voa/kz/reduced.hpp"

#include <boost/math/constants/constants.hpp>

#include "voa/core/errors.hpp"
#include "voa/core/linalg.hpp"

namespace voa::kz {

Json ReducedKZ::to_json() const {
  Json j;
  j["A"] = voa::to_json(A);
  j["B"] = voa::to_json(B);
  return j;
}

ReducedKZ ReducedKZ::from_json(const Json& j) {
  ReducedKZ r{matrix_from_json(j.at("A")), matrix_from_json(j.at("B"))};
  if (!r.A.square() || !r.B.square() || r.A.rows() != r.B.rows()) throw ShapeError("A and B must be square of equal size");
  return r;
}

ReducedKZ reduce(const KZSystem& system, std::pair<std::size_t, std::size_t> at_zero,
                 std::pair<std::size_t, std::size_t> at_one) {
  if (is_zero(system.kappa)) throw CriticalLevelError("kappa = 0: the KZ connection is undefined at the critical level");
  const Rational s = 1 / system.kappa;
  return ReducedKZ{s * system.Omega(at_zero.first, at_zero.second).dense(),
                   s * system.Omega(at_one.first, at_one.second).dense()};
}

namespace {

QMatrix power(const QMatrix& m, unsigned k) {
  QMatrix out = QMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

Spectrum rational_spectrum(const QMatrix& r) {
  if (!r.square()) throw ShapeError("spectrum of a non-square matrix");
  const std::size_t n = r.rows();
  Spectrum sp;
  if (n == 0) return sp;
  Matrix<Poly> chi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) chi(i, j) = Poly(-r(i, j)) + (i == j ? Poly::t() : Poly());
  Poly cp = det_exact(chi);
  std::vector<Rational> roots = rational_roots(cp);
  std::vector<int> mult;
  std::size_t total = 0;
  for (const auto& x : roots) {
    mult.push_back(root_multiplicity(cp, x));
    total += static_cast<std::size_t>(mult.back());
  }
  if (total != n)
    throw UnsupportedSpectrumError("characteristic polynomial " + cp.to_string("x") + " has irrational roots");
  // basis adapted to the generalized eigenspaces
  QMatrix basis(n, n);
  std::size_t col = 0;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    QMatrix shifted = r - roots[k] * QMatrix::identity(n);
    std::vector<QVector> ker = kernel_basis(power(shifted, static_cast<unsigned>(mult[k])));
    if (ker.size() != static_cast<std::size_t>(mult[k])) throw DomainError("generalized eigenspace has the wrong dimension");
    blocks.emplace_back(col, ker.size());
    for (const auto& v : ker) {
      for (std::size_t i = 0; i < n; ++i) basis(i, col) = v[i];
      ++col;
    }
  }
  QMatrix inv = inverse(basis);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    QMatrix e(n, n);
    for (std::size_t c = blocks[k].first; c < blocks[k].first + blocks[k].second; ++c) e(c, c) = 1;
    QMatrix proj = basis * e * inv;
    sp.eigenvalues.push_back(roots[k]);
    sp.nilpotents.push_back((r - roots[k] * QMatrix::identity(n)) * proj);
    sp.projectors.push_back(std::move(proj));
  }
  return sp;
}

namespace {

using VecPoly = std::vector<QVector>;  // coefficient vectors of (log x)^j

bool zero_vec(const QVector& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

void add_into(QVector& a, const QVector& b, const Rational& s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

void add_into(VecPoly& p, std::size_t j, const QVector& v, const Rational& s, std::size_t n) {
  if (p.size() <= j) p.resize(j + 1, QVector(n, 0));
  add_into(p[j], v, s);
}

void trim(VecPoly& p) {
  while (!p.empty() && zero_vec(p.back())) p.pop_back();
}

VecPoly apply_matrix(const QMatrix& m, const VecPoly& p) {
  VecPoly out;
  for (const auto& v : p) out.push_back(m * v);
  trim(out);
  return out;
}

VecPoly derivative(const VecPoly& p) {
  VecPoly out;
  for (std::size_t j = 1; j < p.size(); ++j) {
    QVector v = p[j];
    for (auto& x : v) x *= static_cast<long>(j);
    out.push_back(std::move(v));
  }
  return out;
}

Rational factorial_q(unsigned k) { return Rational(factorial(k)); }

/// Unique polynomial P with (a - R)P + P' = F on an eigenspace where a != lambda.
VecPoly solve_nonresonant(const Rational& a, const Rational& lambda, const QMatrix& proj, const QMatrix& nil,
                          unsigned mult, const VecPoly& f, std::size_t n) {
  // (a - lambda - N)^-1 = sum_r N^r / (a - lambda)^(r+1) on the eigenspace
  QMatrix minv(n, n);
  QMatrix np = proj;
  Rational d = a - lambda, dp = d;
  for (unsigned r = 0; r < mult; ++r) {
    minv += (1 / dp) * np;
    np = nil * np;
    dp *= d;
  }
  VecPoly out;
  VecPoly term = apply_matrix(minv, f);
  Rational sign = 1;
  while (!term.empty()) {
    for (std::size_t j = 0; j < term.size(); ++j) add_into(out, j, term[j], sign, n);
    term = apply_matrix(minv, derivative(term));
    sign = -sign;
  }
  trim(out);
  return out;
}

/// P = exp(NL)(c + int_0^L exp(-Ns) F(s) ds) on the eigenspace with a = lambda.
VecPoly solve_resonant(const QMatrix& proj, const QMatrix& nil, unsigned mult, const VecPoly& f, const QVector& c,
                       std::size_t n) {
  std::vector<QMatrix> npow{proj};
  for (unsigned r = 1; r < mult; ++r) npow.push_back(nil * npow.back());
  VecPoly h{c};
  for (std::size_t j = 0; j < f.size(); ++j)
    for (unsigned r = 0; r < mult; ++r) {
      QVector v = npow[r] * f[j];
      if (zero_vec(v)) continue;
      Rational s = (r % 2 == 0 ? Rational(1) : Rational(-1)) / factorial_q(r) / Rational(static_cast<long>(r + j + 1));
      add_into(h, r + j + 1, v, s, n);
    }
  VecPoly out;
  for (std::size_t j = 0; j < h.size(); ++j)
    for (unsigned r = 0; r < mult; ++r) {
      QVector v = npow[r] * h[j];
      if (zero_vec(v)) continue;
      add_into(out, r + j, v, 1 / factorial_q(r), n);
    }
  trim(out);
  return out;
}

std::optional<Rational> class_of(const std::map<Rational, std::vector<std::vector<QVector>>>& levels,
                                 const Rational& lambda) {
  for (const auto& [mu, lv] : levels) {
    Rational diff = lambda - mu;
    if (diff.get_den() == 1 && sgn(diff) >= 0) return mu;
  }
  return std::nullopt;
}

}  // namespace

unsigned KZSolution::log_power() const {
  std::size_t best = 0;
  for (const auto& [mu, lv] : levels)
    for (const auto& p : lv)
      if (p.size() > 1) best = std::max(best, p.size() - 1);
  return static_cast<unsigned>(best);
}

std::vector<LogSeries> KZSolution::components() const {
  const std::size_t n = seed.size();
  std::vector<LogSeries> out(n);
  for (const auto& [mu, lv] : levels) {
    const unsigned top = [&] {
      std::size_t t = 0;
      for (const auto& p : lv) t = std::max(t, p.size());
      return static_cast<unsigned>(t);
    }();
    for (std::size_t c = 0; c < n; ++c)
      for (unsigned j = 0; j < top; ++j) {
        std::vector<Rational> coeffs;
        for (const auto& p : lv) coeffs.push_back(j < p.size() ? p[j][c] : Rational(0));
        out[c].add(mu, j, Series(0, coeffs, order));
      }
  }
  return out;
}

QVector KZSolution::leading(std::size_t k) const {
  const Rational& lambda = spectrum.eigenvalues.at(k);
  auto mu = class_of(levels, lambda);
  if (!mu) throw DomainError("eigenvalue without a branch");
  Rational diff = lambda - *mu;
  const auto i = static_cast<std::size_t>(diff.get_num().get_si());
  const auto& lv = levels.at(*mu);
  if (i >= lv.size()) throw PrecisionError("eigenvalue " + to_string(lambda) + " lies beyond the computed order");
  if (lv[i].empty()) return QVector(seed.size(), 0);
  return spectrum.projectors[k] * lv[i][0];
}

Json KZSolution::to_json() const {
  Json j;
  j["at"] = at;
  j["order"] = order;
  j["seed"] = voa::to_json(seed);
  Json ev = Json::array();
  for (const auto& x : spectrum.eigenvalues) ev.push_back(voa::to_json(x));
  j["eigenvalues"] = ev;
  j["log_power"] = log_power();
  Json comps = Json::array();
  for (const auto& c : components()) comps.push_back(voa::to_json(c));
  j["components"] = comps;
  return j;
}

KZSolution solve_regular_singular(const ReducedKZ& red, const QVector& w, int order, int at, unsigned log_cap) {
  if (at != 0 && at != 1) throw DomainError("solutions are expanded at 0 or 1");
  if (order < 1) throw DomainError("order must be at least 1");
  const std::size_t n = red.dim();
  if (w.size() != n) throw ShapeError("seed vector has the wrong dimension");
  const QMatrix& r = red.residue(at);
  const QMatrix& s = red.other(at);
  KZSolution sol;
  sol.at = at;
  sol.order = order;
  sol.seed = w;
  sol.spectrum = rational_spectrum(r);
  const Spectrum& sp = sol.spectrum;
  std::vector<unsigned> mult;
  for (const auto& p : sp.projectors) {
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += p(i, i);
    mult.push_back(static_cast<unsigned>(tr.get_num().get_ui()));
  }
  for (const auto& lambda : sp.eigenvalues)
    if (!class_of(sol.levels, lambda)) sol.levels[lambda];

  for (auto& [mu, lv] : sol.levels) {
    for (int i = 0; i < order; ++i) {
      VecPoly f;
      for (int m = 1; m <= i; ++m) {
        const VecPoly& prev = lv[static_cast<std::size_t>(i - m)];
        for (std::size_t j = 0; j < prev.size(); ++j) add_into(f, j, s * prev[j], -1, n);
      }
      trim(f);
      const Rational a = mu + i;
      VecPoly level;
      for (std::size_t k = 0; k < sp.eigenvalues.size(); ++k) {
        VecPoly part;
        VecPoly fk = apply_matrix(sp.projectors[k], f);
        if (sp.eigenvalues[k] == a) {
          part = solve_resonant(sp.projectors[k], sp.nilpotents[k], mult[k], fk, sp.projectors[k] * w, n);
        } else {
          if (fk.empty()) continue;
          part = solve_nonresonant(a, sp.eigenvalues[k], sp.projectors[k], sp.nilpotents[k], mult[k], fk, n);
        }
        for (std::size_t j = 0; j < part.size(); ++j) add_into(level, j, part[j], 1, n);
      }
      trim(level);
      if (level.size() > log_cap + 1)
        throw LogCapError("solution needs (log x)^" + std::to_string(level.size() - 1) + ", above the cap " +
                          std::to_string(log_cap));
      lv.push_back(std::move(level));
    }
  }
  return sol;
}

std::vector<LogSeries> kz_residual(const ReducedKZ& red, const std::vector<LogSeries>& phi, int at, int order) {
  const std::size_t n = red.dim();
  const QMatrix& r = red.residue(at);
  const QMatrix& s = red.other(at);
  Series geometric(1, std::vector<Rational>(static_cast<std::size_t>(order), Rational(1)), order + 1);
  std::vector<LogSeries> out;
  for (std::size_t c = 0; c < n; ++c) {
    LogSeries e = phi[c].euler_derivative();
    LogSeries sphi;
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_zero(r(c, k))) e -= phi[k] * r(c, k);
      if (!is_zero(s(c, k))) sphi += phi[k] * s(c, k);
    }
    e += sphi.times(geometric);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

Real to_real(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

}  // namespace

Real evaluate(const LogSeries& s, const Real& x) {
  using boost::multiprecision::log;
  using boost::multiprecision::pow;
  const Real lx = log(x);
  Real total = 0;
  for (const auto& [lambda, branch] : s.branches()) {
    const Real xl = pow(x, to_real(lambda));
    Real lpow = 1;
    for (const auto& series : branch) {
      if (!series.is_zero()) {
        const int last = series.exact() ? series.last_exponent() : series.precision() - 1;
        Real acc = 0;
        for (int k = last; k >= series.valuation(); --k) acc = acc * x + to_real(series.coeff(k));
        if (series.valuation() != 0) acc *= pow(x, series.valuation());
        total += xl * lpow * acc;
      }
      lpow *= lx;
    }
  }
  return total;
}

RealMatrix fundamental_matrix(const ReducedKZ& red, int order, int at, const Real& x) {
  const std::size_t n = red.dim();
  RealMatrix m(n, std::vector<Real>(n));
  for (std::size_t j = 0; j < n; ++j) {
    QVector w(n, 0);
    w[j] = 1;
    std::vector<LogSeries> comps = solve_regular_singular(red, w, order, at).components();
    for (std::size_t i = 0; i < n; ++i) m[i][j] = evaluate(comps[i], x);
  }
  return m;
}

RealMatrix invert(const RealMatrix& m) {
  using boost::multiprecision::abs;
  const std::size_t n = m.size();
  RealMatrix a = m, inv(n, std::vector<Real>(n, Real(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
    if (a[piv][c] == 0) throw DomainError("fundamental matrix is singular");
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    const Real p = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Real f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

namespace {

RealMatrix multiply(const RealMatrix& a, const RealMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  RealMatrix out(n, std::vector<Real>(m, Real(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

RealMatrix associator_matrix(const ReducedKZ& red, int order, const Real& x) {
  return multiply(invert(fundamental_matrix(red, order, 1, 1 - x)), fundamental_matrix(red, order, 0, x));
}

}  // namespace

std::string format_real(const Real& x, int digits) {
  if (x == 0) return "0";
  return x.str(digits, std::ios_base::scientific);
}

Json AssociatorResult::to_json(int digits) const {
  Json j;
  j["order"] = order;
  j["point"] = voa::to_json(point);
  Json rows = Json::array();
  for (const auto& row : matrix) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(format_real(x, digits));
    rows.push_back(r);
  }
  j["matrix"] = rows;
  j["error_estimate"] = format_real(error, 6);
  return j;
}

AssociatorResult associator(const ReducedKZ& red, int order, const Rational& point, double tolerance) {
  using boost::multiprecision::abs;
  if (sgn(point) <= 0 || point >= 1) throw DomainError("evaluation point must lie in (0, 1)");
  if (order < 3) throw DomainError("associator needs order >= 3 for its error estimate");
  const Real x = to_real(point);
  AssociatorResult res;
  res.order = order;
  res.point = point;
  res.matrix = associator_matrix(red, order, x);
  RealMatrix coarse = associator_matrix(red, order - 2, x);
  for (std::size_t i = 0; i < coarse.size(); ++i)
    for (std::size_t j = 0; j < coarse.size(); ++j) res.error = std::max(res.error, Real(abs(res.matrix[i][j] - coarse[i][j])));
  if (res.error > tolerance)
    throw PrecisionError("associator error estimate " + format_real(res.error, 3) + " exceeds " +
                         format_real(Real(tolerance), 3) + " at order " + std::to_string(order));
  return res;
}

ComplexMatrix monodromy_at_zero(const ReducedKZ& red, int order) {
  using boost::multiprecision::exp;
  const std::size_t n = red.dim();
  const Complex two_pi_i(Real(0), 2 * boost::math::constants::pi<Real>());
  ComplexMatrix m(n, std::vector<Complex>(n, Complex(0)));
  for (std::size_t col = 0; col < n; ++col) {
    QVector w(n, 0);
    w[col] = 1;
    KZSolution sol = solve_regular_singular(red, w, order, 0);
    const Spectrum& sp = sol.spectrum;
    for (std::size_t k = 0; k < sp.eigenvalues.size(); ++k) {
      const Rational& lambda = sp.eigenvalues[k];
      auto mu = class_of(sol.levels, lambda);
      const auto i = static_cast<std::size_t>(Rational(lambda - *mu).get_num().get_si());
      const auto& lv = sol.levels.at(*mu);
      if (i >= lv.size()) throw PrecisionError("order too small to reach eigenvalue " + to_string(lambda));
      // continued level-i coefficient at log x = 0
      std::vector<Complex> q(n, Complex(0));
      Complex lp(1);
      for (const auto& v : lv[i]) {
        for (std::size_t r = 0; r < n; ++r) q[r] += lp * Complex(to_real(v[r]));
        lp *= two_pi_i;
      }
      const Complex phase = exp(two_pi_i * Complex(to_real(*mu)));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (!is_zero(sp.projectors[k](r, c))) m[r][col] += phase * Complex(to_real(sp.projectors[k](r, c))) * q[c];
    }
  }
  return m;
}

}  // namespace voa::kz
