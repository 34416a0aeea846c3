#include "voa/virasoro/virasoro.hpp"

#include <sstream>

namespace voa::vir {

namespace {

void add_mode(std::map<int, Rational>& modes, int n, const Rational& c) {
  if (voa::is_zero(c)) return;
  auto [it, inserted] = modes.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (voa::is_zero(it->second)) modes.erase(it);
  }
}

}  // namespace

VirasoroElement VirasoroElement::L(int n, const Rational& coeff) {
  VirasoroElement x;
  add_mode(x.modes, n, coeff);
  return x;
}

VirasoroElement VirasoroElement::C(const Rational& coeff) {
  VirasoroElement x;
  x.central = coeff;
  return x;
}

VirasoroElement& VirasoroElement::operator+=(const VirasoroElement& o) {
  for (const auto& [n, c] : o.modes) add_mode(modes, n, c);
  central += o.central;
  return *this;
}

VirasoroElement& VirasoroElement::operator-=(const VirasoroElement& o) {
  for (const auto& [n, c] : o.modes) add_mode(modes, n, -c);
  central -= o.central;
  return *this;
}

VirasoroElement operator*(const Rational& s, VirasoroElement a) {
  if (voa::is_zero(s)) return VirasoroElement{};
  for (auto& [n, c] : a.modes) c *= s;
  a.central *= s;
  return a;
}

VirasoroElement vir_bracket(const VirasoroElement& a, const VirasoroElement& b) {
  VirasoroElement out;
  for (const auto& [n, x] : a.modes)
    for (const auto& [m, y] : b.modes) {
      Rational s = x * y;
      add_mode(out.modes, n + m, s * (n - m));
      if (n + m == 0) {
        Rational nn = n;
        out.central += s * (nn * nn * nn - nn) / 12;
      }
    }
  return out;
}

std::string VirasoroElement::to_string() const {
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
  for (auto it = modes.rbegin(); it != modes.rend(); ++it) emit(it->second, "L_" + std::to_string(it->first));
  if (!voa::is_zero(central)) emit(central, "C");
  return first ? "0" : os.str();
}

Json VirasoroElement::to_json() const {
  Json m = Json::object();
  for (const auto& [n, c] : modes) m[std::to_string(n)] = voa::to_json(c);
  return Json{{"modes", m}, {"central", voa::to_json(central)}, {"text", to_string()}};
}

}  // namespace voa::vir
