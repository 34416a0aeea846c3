#include "voa/core/rational.hpp"

#include "voa/core/errors.hpp"

namespace voa {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    Rational r;
    if (r.set_str(digits, 10) != 0) throw ParseError("bad rational literal: " + s);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac);
    r /= Rational(scale);
    r.canonicalize();
    return r;
  }
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + std::string(text));
  if (r.get_den() == 0) throw ParseError("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

Rational binomial(const Rational& top, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= (top - i);
    out /= (i + 1);
  }
  return out;
}

Integer factorial(unsigned n) {
  Integer out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace voa
