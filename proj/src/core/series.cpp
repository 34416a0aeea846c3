#include "voa/core/series.hpp"

#include <algorithm>
#include <sstream>

#include "voa/core/errors.hpp"

namespace voa {

int add_precision(int a, int b) {
  if (a >= Series::kExact || b >= Series::kExact) return Series::kExact;
  long s = static_cast<long>(a) + b;
  return s >= Series::kExact ? Series::kExact : static_cast<int>(s);
}

Series::Series(const Rational& c) {
  if (!voa::is_zero(c)) coeffs_.push_back(c);
}

Series::Series(int start, std::vector<Rational> coeffs, int precision)
    : start_(start), coeffs_(std::move(coeffs)), prec_(precision) {
  normalize();
}

Series Series::monomial(const Rational& c, int k) { return Series(k, {c}); }

Series Series::zero(int precision) {
  Series s;
  s.prec_ = precision;
  s.start_ = precision;
  return s;
}

Series Series::from_window(int valuation, int truncation, std::vector<Rational> coeffs) {
  if (truncation < 0) throw DomainError("negative truncation window");
  if (static_cast<int>(coeffs.size()) > truncation)
    throw ShapeError("more coefficients than the truncation window holds");
  return Series(valuation, std::move(coeffs), valuation + truncation);
}

void Series::normalize() {
  if (!exact() && static_cast<long>(start_) + static_cast<long>(coeffs_.size()) > prec_) {
    long keep = static_cast<long>(prec_) - start_;
    coeffs_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
  }
  std::size_t lead = 0;
  while (lead < coeffs_.size() && voa::is_zero(coeffs_[lead])) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    start_ = exact() ? 0 : prec_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    start_ += static_cast<int>(lead);
  }
  while (!coeffs_.empty() && voa::is_zero(coeffs_.back())) coeffs_.pop_back();
}

int Series::truncation() const {
  if (exact()) return kExact;
  return prec_ - valuation();
}

Rational Series::coeff(int k) const {
  if (k >= prec_)
    throw PrecisionError("coefficient of t^" + std::to_string(k) + " lies beyond O(t^" +
                         std::to_string(prec_) + ")");
  if (coeffs_.empty() || k < start_ || k > last_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(k - start_)];
}

std::vector<Rational> Series::window_coeffs() const {
  if (exact()) throw PrecisionError("exact series has no finite window");
  std::vector<Rational> out;
  for (int k = valuation(); k < prec_; ++k) out.push_back(coeff(k));
  return out;
}

Series Series::derivative() const {
  std::vector<Rational> d;
  d.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * (start_ + static_cast<int>(i)));
  int prec = exact() ? kExact : prec_ - 1;
  return Series(start_ - 1, std::move(d), prec);
}

Series Series::inverse() const {
  if (is_zero()) throw DomainError("series inverse of a series that vanishes on its window");
  int v = start_;
  int window = truncation();
  if (exact()) {
    if (coeffs_.size() == 1) return Series(-v, {1 / coeffs_[0]});
    throw PrecisionError("inverse of a non-monomial exact series needs a finite window");
  }
  // (sum a_i t^i)^{-1} = sum b_j t^j with b_0 = 1/a_0, b_j = -(1/a_0) sum_{i>=1} a_i b_{j-i}.
  std::vector<Rational> b(static_cast<std::size_t>(window));
  Rational inv0 = 1 / coeffs_[0];
  for (int j = 0; j < window; ++j) {
    if (j == 0) {
      b[0] = inv0;
      continue;
    }
    Rational acc = 0;
    for (int i = 1; i <= j && i < static_cast<int>(coeffs_.size()); ++i) acc += coeffs_[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j - i)];
    b[static_cast<std::size_t>(j)] = -inv0 * acc;
  }
  return Series(-v, std::move(b), -v + window);
}

Series Series::shifted(int k) const {
  Series s = *this;
  s.start_ += k;
  if (!exact()) s.prec_ += k;
  return s;
}

Series Series::truncated(int precision) const {
  if (precision >= prec_) return *this;
  Series s = *this;
  s.prec_ = precision;
  s.normalize();
  return s;
}

Series& Series::operator+=(const Series& o) {
  int prec = std::min(prec_, o.prec_);
  if (o.coeffs_.empty()) {
    prec_ = prec;
    normalize();
    return *this;
  }
  if (coeffs_.empty()) {
    int p = prec;
    *this = o;
    prec_ = p;
    normalize();
    return *this;
  }
  int lo = std::min(start_, o.start_);
  int hi = std::max(last_exponent(), o.last_exponent());
  std::vector<Rational> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[static_cast<std::size_t>(start_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) sum[static_cast<std::size_t>(o.start_ - lo) + i] += o.coeffs_[i];
  start_ = lo;
  coeffs_ = std::move(sum);
  prec_ = prec;
  normalize();
  return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series& Series::operator*=(const Rational& s) {
  if (voa::is_zero(s)) {
    *this = Series();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  int prec;
  if (a.is_zero() && b.is_zero()) {
    prec = add_precision(a.prec_, b.prec_);
  } else if (a.is_zero()) {
    prec = add_precision(a.prec_, b.start_);
  } else if (b.is_zero()) {
    prec = add_precision(b.prec_, a.start_);
  } else {
    int window = std::min(a.truncation(), b.truncation());
    prec = add_precision(add_precision(a.start_, b.start_), window);
  }
  if (a.is_zero() || b.is_zero()) return Series::zero(prec);
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  long limit = static_cast<long>(prec) - (a.start_ + b.start_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (static_cast<long>(i) >= limit) break;
    if (voa::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<long>(i + j) < limit; ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Series(a.start_ + b.start_, std::move(out), prec);
}

bool operator==(const Series& a, const Series& b) {
  int prec = std::min(a.prec_, b.prec_);
  int lo = std::min(a.coeffs_.empty() ? prec : a.start_, b.coeffs_.empty() ? prec : b.start_);
  int hi = std::max(a.coeffs_.empty() ? lo : a.last_exponent(), b.coeffs_.empty() ? lo : b.last_exponent());
  hi = std::min(hi, prec - 1);
  for (int k = lo; k <= hi; ++k)
    if (a.coeff(k) != b.coeff(k)) return false;
  return true;
}

std::string Series::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (voa::is_zero(c)) continue;
    int k = start_ + static_cast<int>(i);
    os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    first = false;
    Rational mag = abs(c);
    if (mag != 1 || k == 0) os << voa::to_string(mag);
    if (k != 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k != 1) os << "^" << (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
    }
  }
  if (first) os << "0";
  if (!exact()) os << " + O(" << var << "^" << prec_ << ")";
  return os.str();
}

}  // namespace voa
