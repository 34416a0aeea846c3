#include "voa/fock/affine.hpp"

#include <algorithm>
#include <sstream>

#include "voa/core/errors.hpp"

namespace voa::fock {

namespace {

template <typename Map, typename Key>
void add(Map& into, const Key& key, const Rational& c) {
  if (voa::is_zero(c)) return;
  auto [it, inserted] = into.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (voa::is_zero(it->second)) into.erase(it);
  }
}

void require_same(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b && (!a || !b || a->to_json() != b->to_json()))
    throw DomainError("affine elements over different Lie algebras");
}

}  // namespace

AffineElement AffineElement::loop(AlgebraPtr alg, std::size_t gen, int n, const Rational& c) {
  if (gen >= alg->dim()) throw DomainError("generator index out of range");
  AffineElement x{std::move(alg), {}, 0};
  add(x.terms, std::make_pair(gen, n), c);
  return x;
}

AffineElement AffineElement::K(AlgebraPtr alg, const Rational& c) { return AffineElement{std::move(alg), {}, c}; }

AffineElement& AffineElement::operator+=(const AffineElement& o) {
  if (!algebra) algebra = o.algebra;
  require_same(algebra, o.algebra);
  for (const auto& [k, c] : o.terms) add(terms, k, c);
  central += o.central;
  return *this;
}

AffineElement affine_bracket(const AffineElement& x, const AffineElement& y) {
  require_same(x.algebra, y.algebra);
  const auto& g = *x.algebra;
  AffineElement out{x.algebra, {}, 0};
  for (const auto& [ka, ca] : x.terms)
    for (const auto& [kb, cb] : y.terms) {
      const auto [a, m] = ka;
      const auto [b, n] = kb;
      Rational s = ca * cb;
      const QVector& br = g.bracket(a, b);
      for (std::size_t c = 0; c < br.size(); ++c) add(out.terms, std::make_pair(c, m + n), s * br[c]);
      if (m + n == 0) out.central += s * m * g.form()(a, b);
    }
  return out;
}

std::string AffineElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& sym) {
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) os << voa::to_string(mag) << "*";
    os << sym;
  };
  for (const auto& [k, c] : terms) {
    std::string sym = algebra->generator(k.first).name;
    if (k.second != 0) sym += "*t^" + std::to_string(k.second);
    emit(c, sym);
  }
  if (!voa::is_zero(central)) emit(central, "K");
  return first ? "0" : os.str();
}

Json AffineElement::to_json() const {
  Json t = Json::array();
  for (const auto& [k, c] : terms)
    t.push_back({{"generator", algebra->generator(k.first).name}, {"power", k.second}, {"coeff", voa::to_json(c)}});
  return Json{{"terms", t}, {"central", voa::to_json(central)}, {"text", to_string()}};
}

struct VacuumModule::State {
  std::mutex mutex;
  std::map<int, std::vector<VacuumMonomial>> basis;
  std::map<std::tuple<std::size_t, int, VacuumMonomial>, VacuumVector> act;
};

VacuumModule::VacuumModule(AlgebraPtr alg, Rational level)
    : alg_(std::move(alg)), k_(std::move(level)), state_(std::make_shared<State>()) {}

bool VacuumModule::critical() const { return k_ + alg_->dual_coxeter() == 0; }

const std::vector<VacuumMonomial>& VacuumModule::basis(int degree) const {
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->basis.find(degree);
    if (it != state_->basis.end()) return it->second;
  }
  std::vector<VacuumMonomial> out;
  VacuumMonomial cur;
  const std::size_t dimg = alg_->dim();
  // nondecreasing sequences of (mode, gen) with modes <= -1 summing to -degree
  auto rec = [&](auto&& self, int remaining, CurrentMode lower) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int mode = lower.mode; mode <= -1; ++mode) {
      if (-mode > remaining) continue;
      for (std::size_t g = (mode == lower.mode ? lower.gen : 0); g < dimg; ++g) {
        cur.push_back({mode, g});
        self(self, remaining + mode, CurrentMode{mode, g});
        cur.pop_back();
      }
    }
  };
  if (degree >= 0) rec(rec, degree, CurrentMode{-degree, 0});
  std::sort(out.begin(), out.end());
  std::lock_guard lock(state_->mutex);
  return state_->basis.try_emplace(degree, std::move(out)).first->second;
}

const VacuumVector& VacuumModule::act_basis(std::size_t a, int n, const VacuumMonomial& m) const {
  const auto key = std::make_tuple(a, n, m);
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->act.find(key);
    if (it != state_->act.end()) return it->second;
  }
  VacuumVector out;
  const CurrentMode self{n, a};
  if (m.empty()) {
    if (n < 0) out.emplace(VacuumMonomial{self}, Rational(1));
  } else if (n < 0 && self <= m.front()) {
    VacuumMonomial w{self};
    w.insert(w.end(), m.begin(), m.end());
    out.emplace(std::move(w), Rational(1));
  } else {
    // J^a_n X R = X (J^a_n R) + [J^a_n, X] R
    const CurrentMode x = m.front();
    const VacuumMonomial rest(m.begin() + 1, m.end());
    for (const auto& [w, c] : act_basis(a, n, rest))
      for (const auto& [w2, c2] : act_basis(x.gen, x.mode, w)) add(out, w2, c * c2);
    const QVector& br = alg_->bracket(a, x.gen);
    for (std::size_t g = 0; g < br.size(); ++g) {
      if (voa::is_zero(br[g])) continue;
      for (const auto& [w, c] : act_basis(g, n + x.mode, rest)) add(out, w, br[g] * c);
    }
    if (n + x.mode == 0) {
      Rational central = Rational(n) * alg_->form()(a, x.gen) * k_;
      if (!voa::is_zero(central)) add(out, rest, central);
    }
  }
  std::lock_guard lock(state_->mutex);
  return state_->act.try_emplace(key, std::move(out)).first->second;
}

VacuumVector VacuumModule::act(std::size_t a, int n, const VacuumVector& v) const {
  if (a >= alg_->dim()) throw DomainError("generator index out of range");
  VacuumVector out;
  for (const auto& [m, c] : v)
    for (const auto& [w, x] : act_basis(a, n, m)) add(out, w, c * x);
  return out;
}

QVector VacuumModule::coordinates(const VacuumVector& v, int degree) const {
  const auto& b = basis(degree);
  QVector out(b.size());
  for (const auto& [m, c] : v) {
    auto it = std::lower_bound(b.begin(), b.end(), m);
    if (it == b.end() || *it != m) throw ShapeError("vector has components outside degree " + std::to_string(degree));
    out[static_cast<std::size_t>(it - b.begin())] = c;
  }
  return out;
}

QMatrix VacuumModule::matrix_of(const std::function<VacuumVector(const VacuumVector&)>& op, int from, int to) const {
  const auto& src = basis(from);
  QMatrix out(dim(to), src.size());
  if (to < 0) return out;
  for (std::size_t j = 0; j < src.size(); ++j) {
    QVector col = coordinates(op(VacuumVector{{src[j], Rational(1)}}), to);
    for (std::size_t i = 0; i < col.size(); ++i) out(i, j) = col[i];
  }
  return out;
}

QMatrix VacuumModule::mode_matrix(std::size_t a, int n, int degree) const {
  return matrix_of([&](const VacuumVector& v) { return act(a, n, v); }, degree, degree - n);
}

QMatrix VacuumModule::sugawara_raw(int n, int degree) const {
  const QMatrix& dual = alg_->dual_basis();
  const int d = degree;
  auto op = [&](const VacuumVector& v) {
    VacuumVector out;
    for (std::size_t a = 0; a < alg_->dim(); ++a)
      for (std::size_t b = 0; b < alg_->dim(); ++b) {
        Rational w = dual(a, b);
        if (voa::is_zero(w)) continue;
        w /= 2;
        for (int j = n - d; j <= -1; ++j)
          for (const auto& [m, c] : act(a, j, act(b, n - j, v))) add(out, m, w * c);
        for (int j = 0; j <= d; ++j)
          for (const auto& [m, c] : act(b, n - j, act(a, j, v))) add(out, m, w * c);
      }
    return out;
  };
  return matrix_of(op, degree, degree - n);
}

QMatrix VacuumModule::sugawara(int n, int degree) const {
  if (critical())
    throw CriticalLevelError("k = -h^vee: the conformal normalization 1/(k + h^vee) is undefined; use the raw modes");
  return (Rational(1) / (k_ + alg_->dual_coxeter())) * sugawara_raw(n, degree);
}

GradedField VacuumModule::current_field(std::size_t a) const {
  VacuumModule self = *this;
  return GradedField("J^" + alg_->generator(a).name, 1, [self](int d) { return self.dim(d); },
                     [self, a](int n, int d, const QVector& x) {
                       const auto& b = self.basis(d);
                       VacuumVector v;
                       for (std::size_t i = 0; i < x.size(); ++i)
                         if (!voa::is_zero(x[i])) v.emplace(b[i], x[i]);
                       return self.coordinates(self.act(a, n, v), d - n);
                     });
}

std::string VacuumModule::to_string(const VacuumMonomial& m) const {
  std::ostringstream os;
  for (const auto& x : m) os << "J^" << alg_->generator(x.gen).name << "_{" << x.mode << "}";
  os << "|0>";
  return os.str();
}

Json SugawaraReport::to_json() const {
  return Json{{"passed", passed},
              {"central_charge", central_charge ? voa::to_json(*central_charge) : Json(nullptr)},
              {"checks", checks},
              {"witness", witness ? Json(*witness) : Json(nullptr)}};
}

SugawaraReport check_virasoro_of_sugawara(const VacuumModule& v, int mode_cap, int degree_cap) {
  SugawaraReport r;
  std::map<std::pair<int, int>, QMatrix> cache;
  auto L = [&](int n, int d) -> const QMatrix& {
    auto it = cache.find({n, d});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, d), v.sugawara(n, d)).first;
    return it->second;
  };
  auto product = [&](int n, int m, int d) {
    int mid = d - m, out = mid - n;
    if (mid < 0 || out < 0) return QMatrix(v.dim(out), v.dim(d));
    return L(n, mid) * L(m, d);
  };
  for (int d = 0; d <= degree_cap; ++d)
    for (int n = -mode_cap; n <= mode_cap; ++n)
      for (int m = -mode_cap; m <= mode_cap; ++m) {
        int out = d - n - m;
        if (out < 0) continue;
        QMatrix x = product(n, m, d) - product(m, n, d) - Rational(n - m) * L(n + m, d);
        ++r.checks;
        std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " degree=" + std::to_string(d);
        if (n + m != 0) {
          if (!x.is_zero() && r.passed) {
            r.passed = false;
            r.witness = where;
          }
          continue;
        }
        Rational scalar = x.rows() ? x(0, 0) : Rational(0);
        if (x != scalar * QMatrix::identity(x.rows())) {
          if (r.passed) {
            r.passed = false;
            r.witness = where + " (anomaly is not scalar)";
          }
          continue;
        }
        Rational nn = n;
        Rational anomaly = (nn * nn * nn - nn) / 12;
        if (voa::is_zero(anomaly)) {
          if (!voa::is_zero(scalar) && r.passed) {
            r.passed = false;
            r.witness = where;
          }
          continue;
        }
        Rational c = scalar / anomaly;
        if (r.central_charge && *r.central_charge != c)
          throw TruncationTooSmallError("central charge " + voa::to_string(c) + " at " + where + " disagrees with " +
                                        voa::to_string(*r.central_charge));
        r.central_charge = c;
      }
  return r;
}

AxiomReport check_sugawara_centrality(const VacuumModule& v, int mode_cap, int degree_cap) {
  AxiomReport r;
  std::map<std::pair<int, int>, QMatrix> cache;
  auto S = [&](int n, int d) -> const QMatrix& {
    auto it = cache.find({n, d});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, d), v.sugawara_raw(n, d)).first;
    return it->second;
  };
  for (int d = 0; d <= degree_cap; ++d)
    for (int n = -mode_cap; n <= mode_cap; ++n)
      for (int m = -mode_cap; m <= mode_cap; ++m)
        for (std::size_t a = 0; a < v.algebra()->dim(); ++a) {
          int out = d - n - m;
          if (out < 0) continue;
          QMatrix sj = d - m >= 0 ? S(n, d - m) * v.mode_matrix(a, m, d) : QMatrix(v.dim(out), v.dim(d));
          QMatrix js = d - n >= 0 ? v.mode_matrix(a, m, d - n) * S(n, d) : QMatrix(v.dim(out), v.dim(d));
          ++r.checks;
          if (sj != js) {
            r.passed = false;
            r.witness = "[S_" + std::to_string(n) + ", J^" + v.algebra()->generator(a).name + "_" + std::to_string(m) +
                        "] != 0 at degree " + std::to_string(d);
            return r;
          }
        }
  return r;
}

}  // namespace voa::fock
