#include "voa/hodge/weight.hpp"

#include "voa/core/errors.hpp"
#include "voa/core/linalg.hpp"

namespace voa::hodge {

NilpotentEndo::NilpotentEndo(QMatrix n) : n_(std::move(n)) {
  if (!n_.square()) throw ShapeError("nilpotent endomorphism must be square");
  powers_.push_back(QMatrix::identity(n_.rows()));
  while (!powers_.back().is_zero()) {
    if (powers_.size() > n_.rows()) throw NilpotencyError("matrix is not nilpotent: N^" + std::to_string(n_.rows()) + " != 0");
    powers_.push_back(powers_.back() * n_);
  }
  index_ = static_cast<unsigned>(powers_.size() - 1);
}

const QMatrix& NilpotentEndo::power(unsigned k) const {
  if (k >= powers_.size()) return powers_.back();
  return powers_[k];
}

const Subspace& WeightFiltration::W(int k) const {
  if (k < low) return zero_;
  if (k > high) return full_;
  return steps.at(k);
}

Json WeightFiltration::to_json() const {
  Json j;
  j["ambient"] = ambient;
  Json st = Json::array();
  for (const auto& [k, s] : steps) {
    Json e;
    e["k"] = k;
    e["dim"] = s.dim();
    e["gr_dim"] = gr_dim(k);
    e["basis"] = s.to_json();
    st.push_back(e);
  }
  j["steps"] = st;
  return j;
}

WeightFiltration make_filtration(std::size_t ambient, std::map<int, Subspace> steps) {
  WeightFiltration w;
  w.ambient = ambient;
  w.zero_ = Subspace(ambient);
  w.full_ = Subspace::full(ambient);
  if (!steps.empty()) {
    w.low = steps.begin()->first;
    w.high = steps.rbegin()->first;
  }
  w.steps = std::move(steps);
  return w;
}

WeightFiltration weight_filtration(const NilpotentEndo& n) {
  const std::size_t d = n.dim();
  const int nu = static_cast<int>(n.index());
  std::map<int, Subspace> steps;
  // nu = 0 only for the zero space
  const int top = std::max(nu - 1, 0);
  for (int k = -top; k <= top; ++k) {
    Subspace acc(d);
    for (int q = std::max(0, -k); q <= nu; ++q) {
      const int kp = k + q + 1;
      if (kp <= 0) continue;
      acc = acc + intersect(Subspace::kernel(n.power(static_cast<unsigned>(kp))),
                            Subspace::image(n.power(static_cast<unsigned>(q))));
    }
    steps.emplace(k, std::move(acc));
  }
  WeightFiltration w = make_filtration(d, std::move(steps));
  PropertyReport r = check_weight_properties(n, w);
  if (!r.ok) throw DomainError("weight filtration construction failed: " + r.failure);
  return w;
}

PropertyReport check_weight_properties(const NilpotentEndo& n, const WeightFiltration& w) {
  PropertyReport r;
  auto fail = [&](std::string why) {
    r.ok = false;
    r.failure = std::move(why);
    return r;
  };
  const int lo = w.low - 2, hi = w.high + 2;
  if (w.W(hi).dim() != n.dim()) return fail("filtration does not exhaust the space");
  if (w.W(lo).dim() != 0) return fail("filtration does not start at zero");
  for (int k = lo; k <= hi; ++k) {
    if (!w.W(k).contains(w.W(k - 1))) return fail("W_" + std::to_string(k - 1) + " not inside W_" + std::to_string(k));
    if (!w.W(k - 2).contains(w.W(k).mapped(n.matrix())))
      return fail("N W_" + std::to_string(k) + " not inside W_" + std::to_string(k - 2));
  }
  for (int k = 0; k <= hi; ++k) {
    if (w.gr_dim(k) != w.gr_dim(-k)) return fail("dim Gr_" + std::to_string(k) + " != dim Gr_" + std::to_string(-k));
    const QMatrix& nk = n.power(static_cast<unsigned>(k));
    // the induced map Gr_k -> Gr_-k has rank dim Gr_k
    Subspace img = w.W(k).mapped(nk) + w.W(-k - 1);
    if (!w.W(-k).contains(img)) return fail("N^" + std::to_string(k) + " W_" + std::to_string(k) + " not inside W_" + std::to_string(-k));
    if (img.dim() - w.W(-k - 1).dim() != w.gr_dim(k))
      return fail("N^" + std::to_string(k) + ": Gr_" + std::to_string(k) + " -> Gr_" + std::to_string(-k) + " is not injective");
  }
  return r;
}

Json GradedPairing::to_json() const {
  Json j;
  j["nondegenerate"] = nondegenerate;
  if (witness) j["witness"] = *witness;
  Json f = Json::array();
  for (const auto& [k, m] : forms) {
    Json e;
    e["k"] = k;
    e["form"] = voa::to_json(m);
    f.push_back(e);
  }
  j["forms"] = f;
  return j;
}

GradedPairing graded_pairing(const QMatrix& b, const NilpotentEndo& n, const WeightFiltration& w) {
  if (!b.square() || b.rows() != n.dim()) throw ShapeError("pairing and endomorphism sizes differ");
  if (!(n.matrix().transpose() * b + b * n.matrix()).is_zero())
    throw InvarianceError("pairing is not N-invariant: B(Nu, v) + B(u, Nv) != 0");
  GradedPairing g;
  for (int k = 0; k <= w.high; ++k) {
    std::vector<QVector> reps = w.W(k).complement_of(w.W(k - 1));
    const QMatrix& nk = n.power(static_cast<unsigned>(k));
    QMatrix form(reps.size(), reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      QVector bu = b.transpose() * reps[i];
      for (std::size_t j = 0; j < reps.size(); ++j) {
        QVector nv = nk * reps[j];
        Rational acc = 0;
        for (std::size_t r = 0; r < nv.size(); ++r) acc += bu[r] * nv[r];
        form(i, j) = acc;
      }
    }
    if (!reps.empty() && det_exact(form) == 0 && g.nondegenerate) {
      g.nondegenerate = false;
      g.witness = k;
    }
    g.forms.emplace(k, std::move(form));
  }
  return g;
}

QMatrix nilpotent_exp(const NilpotentEndo& n, const Rational& s) {
  QMatrix out(n.dim(), n.dim());
  Rational c = 1;
  for (unsigned k = 0; k < std::max(n.index(), 1u); ++k) {
    out += c * n.power(k);
    c = c * s / Rational(k + 1);
  }
  return out;
}

QMatrix adjoint_action(const QMatrix& n) {
  const std::size_t d = n.rows();
  QMatrix ad(d * d, d * d);
  // [N, E_ij] = sum_k N_ki E_kj - sum_k N_jk E_ik
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        ad(k * d + j, i * d + j) += n(k, i);
        ad(i * d + k, i * d + j) -= n(j, k);
      }
  return ad;
}

std::vector<std::vector<LogSeries>> limit_twist(const std::vector<QVector>& frame, const NilpotentEndo& n) {
  std::vector<std::vector<LogSeries>> out;
  for (const auto& v : frame) {
    if (v.size() != n.dim()) throw ShapeError("frame vector has the wrong dimension");
    std::vector<LogSeries> comps(n.dim());
    Rational c = 1;
    for (unsigned k = 0; k < std::max(n.index(), 1u); ++k) {
      QVector nv = n.power(k) * v;
      for (std::size_t r = 0; r < nv.size(); ++r)
        if (!is_zero(nv[r])) comps[r].add(0, k, Series(c * nv[r]));
      c /= Rational(k + 1);
    }
    out.push_back(std::move(comps));
  }
  return out;
}

}  // namespace voa::hodge
