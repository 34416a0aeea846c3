#include "voa/core/poly.hpp"

#include <algorithm>
#include <sstream>

#include "voa/core/errors.hpp"

namespace voa {

Poly::Poly(const Rational& c) {
  if (!voa::is_zero(c)) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::t(unsigned power) {
  std::vector<Rational> c(power + 1);
  c[power] = 1;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && voa::is_zero(coeffs_.back())) coeffs_.pop_back();
}

int Poly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!voa::is_zero(coeffs_[k])) return static_cast<int>(k);
  return -1;
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (voa::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (voa::is_zero(s)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  Poly rem = num;
  if (rem.degree() < den.degree()) return {Poly(), rem};
  std::vector<Rational> q(rem.degree() - den.degree() + 1);
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    Rational factor = rem.leading() / den.leading();
    q[shift] = factor;
    for (int k = 0; k <= den.degree(); ++k) rem.coeffs_[k + shift] -= factor * den.coeffs_[k];
    rem.trim();
  }
  return {Poly(std::move(q)), rem};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = Poly::divrem(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (voa::is_zero(c)) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || k == 0) os << voa::to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace voa

namespace voa {

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("every number is a root of the zero polynomial");
  std::vector<Rational> roots;
  int v = p.valuation();
  if (v > 0) roots.push_back(0);
  // integer coefficients of p / t^v
  Integer lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> a;
  for (std::size_t i = static_cast<std::size_t>(v); i < p.coeffs().size(); ++i) {
    Rational scaled = p.coeffs()[i] * lcm;
    a.push_back(scaled.get_num());
  }
  if (a.size() > 1) {
    for (const auto& num : positive_divisors(a.front()))
      for (const auto& den : positive_divisors(a.back()))
        for (int sign : {1, -1}) {
          Rational x(num * sign, den);
          x.canonicalize();
          if (std::find(roots.begin(), roots.end(), x) != roots.end()) continue;
          if (p(x) == 0) roots.push_back(x);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int root_multiplicity(const Poly& p, const Rational& x) {
  int m = 0;
  Poly q = p;
  while (!q.is_zero() && q(x) == 0) {
    q = q.derivative();
    ++m;
  }
  return m;
}

}  // namespace voa
