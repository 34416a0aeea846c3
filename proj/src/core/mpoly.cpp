#include "voa/core/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "voa/core/errors.hpp"

namespace voa {

MPoly::MPoly(const Rational& constant) { add_term({}, constant); }

MPoly::MPoly(std::size_t nvars, const Rational& constant) : nvars_(nvars) {
  add_term(Exponent(nvars, 0), constant);
}

MPoly MPoly::zero(std::size_t nvars) {
  MPoly p;
  p.nvars_ = nvars;
  return p;
}

void MPoly::widen(std::size_t nvars) {
  if (nvars <= nvars_) return;
  std::map<Exponent, Rational> moved;
  for (auto& [e, c] : terms_) {
    Exponent w = e;
    w.resize(nvars, 0);
    moved.emplace(std::move(w), c);
  }
  terms_ = std::move(moved);
  nvars_ = nvars;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
  MPoly x = a, y = b;
  std::size_t n = std::max(a.nvars_, b.nvars_);
  x.widen(n);
  y.widen(n);
  return x.terms_ == y.terms_;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  MPoly p = zero(nvars);
  if (index >= nvars) throw ShapeError("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Rational MPoly::coeff(const Exponent& e) const {
  if (e.size() > nvars_) {
    for (std::size_t i = nvars_; i < e.size(); ++i)
      if (e[i] != 0) return 0;
  }
  Exponent k = e;
  k.resize(nvars_, 0);
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::constant() const { return coeff(Exponent(nvars_, 0)); }

int MPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (voa::is_zero(c)) return;
  widen(e.size());
  Exponent k = e;
  k.resize(nvars_, 0);
  auto [it, inserted] = terms_.try_emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (voa::is_zero(it->second)) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  widen(o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  widen(o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& s) {
  if (voa::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out = MPoly::zero(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponent e(out.nvars_, 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then reverse lexicographic for stability.
  std::vector<std::pair<Exponent, Rational>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (int v : x.first) dx += v;
    for (int v : y.first) dy += v;
    return dx > dy;
  });
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    for (int x : e) has_var = has_var || x > 0;
    if (mag != 1 || !has_var) os << voa::to_string(mag);
    bool need_star = (mag != 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace voa
