#include "voa/lie/pbw.hpp"

#include <sstream>

#include "voa/core/errors.hpp"

namespace voa::lie {

namespace {

using Word = PBWElement::Word;
using Terms = std::map<Word, Rational>;

class Straightener {
 public:
  explicit Straightener(const FiniteLieAlgebra& alg) : alg_(alg) {}

  const Terms& normal(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Terms out;
    std::size_t i = 0;
    while (i + 1 < w.size() && alg_.pbw_position(w[i]) <= alg_.pbw_position(w[i + 1])) ++i;
    if (i + 1 >= w.size()) {
      out.emplace(w, Rational(1));
    } else {
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      accumulate(out, normal(swapped), 1);
      const QVector& br = alg_.bracket(w[i], w[i + 1]);
      for (std::size_t k = 0; k < br.size(); ++k) {
        if (voa::is_zero(br[k])) continue;
        Word shorter(w.begin(), w.begin() + static_cast<long>(i));
        shorter.push_back(k);
        shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        accumulate(out, normal(shorter), br[k]);
      }
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

  static void accumulate(Terms& into, const Terms& from, const Rational& s) {
    for (const auto& [w, c] : from) {
      auto [it, inserted] = into.try_emplace(w, s * c);
      if (!inserted) {
        it->second += s * c;
        if (voa::is_zero(it->second)) into.erase(it);
      }
    }
  }

 private:
  const FiniteLieAlgebra& alg_;
  std::map<Word, Terms> memo_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  return a && b && a->name() == b->name() && a->dim() == b->dim() && a->to_json() == b->to_json();
}

void require_same(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!same_algebra(a, b)) throw DomainError("PBW elements belong to different Lie algebras");
}

}  // namespace

PBWElement PBWElement::scalar(AlgebraPtr alg, const Rational& c) {
  PBWElement x(std::move(alg));
  x.add({}, c);
  return x;
}

PBWElement PBWElement::generator(AlgebraPtr alg, std::size_t i) {
  if (i >= alg->dim()) throw DomainError("generator index out of range");
  PBWElement x(std::move(alg));
  x.add({i}, 1);
  return x;
}

PBWElement PBWElement::word(AlgebraPtr alg, const Word& w, const Rational& coeff) {
  for (std::size_t i : w)
    if (i >= alg->dim()) throw DomainError("generator index out of range");
  PBWElement x(alg);
  Straightener s(*alg);
  Straightener::accumulate(x.terms_, s.normal(w), coeff);
  return x;
}

PBWElement PBWElement::parse(AlgebraPtr alg, const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == '*' || ch == ',' || ch == '.') ch = ' ';
  std::istringstream is(cleaned);
  Word w;
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    w.push_back(alg->index_of(tok));
  }
  return word(std::move(alg), w);
}

Rational PBWElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PBWElement::add(const Word& w, const Rational& c) {
  if (voa::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (voa::is_zero(it->second)) terms_.erase(it);
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  require_same(alg_, o.alg_);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  require_same(alg_, o.alg_);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

PBWElement operator*(const PBWElement& a, const PBWElement& b) {
  require_same(a.alg_, b.alg_);
  PBWElement out(a.alg_);
  Straightener s(*a.alg_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Straightener::accumulate(out.terms_, s.normal(w), ca * cb);
    }
  return out;
}

PBWElement operator*(const Rational& s, PBWElement a) {
  if (voa::is_zero(s)) {
    a.terms_.clear();
    return a;
  }
  for (auto& [w, c] : a.terms_) c *= s;
  return a;
}

std::optional<std::vector<int>> PBWElement::weight() const {
  std::optional<std::vector<int>> result;
  for (const auto& [w, c] : terms_) {
    std::vector<int> wt;
    for (std::size_t g : w) {
      const Generator& gen = alg_->generator(g);
      if (wt.size() < gen.root.size()) wt.resize(gen.root.size(), 0);
      int sign = gen.kind == GeneratorKind::Raising ? 1 : gen.kind == GeneratorKind::Lowering ? -1 : 0;
      for (std::size_t r = 0; r < gen.root.size(); ++r) wt[r] += sign * gen.root[r];
    }
    std::size_t rdim = alg_->dim() ? alg_->generator(0).root.size() : 0;
    wt.resize(rdim, 0);
    if (result && *result != wt) throw DomainError("PBW element is not homogeneous");
    result = wt;
  }
  return result;
}

std::string PBWElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (w.empty()) {
      os << voa::to_string(mag);
      continue;
    }
    if (mag != 1) os << voa::to_string(mag) << "*";
    for (std::size_t k = 0; k < w.size();) {
      std::size_t run = 1;
      while (k + run < w.size() && w[k + run] == w[k]) ++run;
      if (k) os << "*";
      os << alg_->generator(w[k]).name;
      if (run > 1) os << "^" << run;
      k += run;
    }
  }
  return os.str();
}

Json PBWElement::to_json() const {
  Json terms = Json::array();
  for (const auto& [w, c] : terms_) {
    Json word = Json::array();
    for (std::size_t g : w) word.push_back(alg_->generator(g).name);
    terms.push_back({{"word", word}, {"coeff", voa::to_json(c)}});
  }
  return Json{{"algebra", alg_->name()}, {"terms", terms}, {"text", to_string()}};
}

PBWElement pbw_normalize(const std::vector<GeneratorRef>& word, const Rational& coeff) {
  if (word.empty()) throw DomainError("cannot infer the algebra of an empty word");
  Word w;
  for (const auto& g : word) {
    require_same(word.front().algebra, g.algebra);
    w.push_back(g.index);
  }
  return PBWElement::word(word.front().algebra, w, coeff);
}

PBWElement sigma(const PBWElement& x) {
  const auto& alg = x.algebra();
  PBWElement out(alg);
  Straightener s(*alg);
  for (const auto& [w, c] : x.terms()) {
    Word r(w.rbegin(), w.rend());
    for (auto& g : r) g = alg->sigma(g);
    out += PBWElement::word(alg, r, c);
  }
  return out;
}

PBWElement commutator(const PBWElement& a, const PBWElement& b) { return a * b - b * a; }

MPoly hc_project(const PBWElement& x) {
  const auto& alg = *x.algebra();
  const std::size_t r = alg.rank();
  std::vector<std::size_t> slot(alg.dim(), r);
  for (std::size_t c = 0; c < r; ++c) slot[alg.cartan()[c]] = c;
  MPoly out = MPoly::zero(r);
  for (const auto& [w, c] : x.terms()) {
    MPoly::Exponent e(r, 0);
    bool pure = true;
    for (std::size_t g : w) {
      if (slot[g] == r) {
        pure = false;
        break;
      }
      ++e[slot[g]];
    }
    if (pure) out.add_term(e, c);
  }
  return out;
}

MPoly harish_chandra(const PBWElement& z) {
  const auto& alg = *z.algebra();
  const std::size_t r = alg.rank();
  std::vector<MPoly> shifted;
  for (std::size_t c = 0; c < r; ++c) shifted.push_back(MPoly::variable(r, c) - MPoly(r, alg.rho()[c]));
  return hc_project(z).evaluate<MPoly>(shifted);
}

bool is_central(const PBWElement& z) {
  const auto& alg = z.algebra();
  for (std::size_t i = 0; i < alg->dim(); ++i)
    if (!commutator(PBWElement::generator(alg, i), z).is_zero()) return false;
  return true;
}

PBWElement casimir(const AlgebraPtr& alg) {
  PBWElement out(alg);
  const QMatrix& d = alg->dual_basis();
  for (std::size_t a = 0; a < alg->dim(); ++a)
    for (std::size_t b = 0; b < alg->dim(); ++b)
      if (!voa::is_zero(d(a, b))) out += PBWElement::word(alg, {a, b}, d(a, b));
  return out;
}

Rational evaluate_at(const MPoly& p, const WeightVector& mu) {
  if (p.nvars() > mu.size()) throw ShapeError("weight has fewer entries than the Cartan rank");
  return p.evaluate<Rational>(mu);
}

std::vector<std::string> cartan_names(const FiniteLieAlgebra& alg) {
  std::vector<std::string> names;
  for (std::size_t c : alg.cartan()) names.push_back(alg.generator(c).name);
  return names;
}

}  // namespace voa::lie
