#pragma once

#include <map>
#include <string>

#include "voa/core/json_io.hpp"
#include "voa/core/rational.hpp"

namespace voa::vir {

/// Finite combination sum_n a_n L_n + z C.
struct VirasoroElement {
  std::map<int, Rational> modes;
  Rational central = 0;

  static VirasoroElement L(int n, const Rational& coeff = 1);
  static VirasoroElement C(const Rational& coeff = 1);

  bool is_zero() const { return modes.empty() && voa::is_zero(central); }
  VirasoroElement& operator+=(const VirasoroElement& o);
  VirasoroElement& operator-=(const VirasoroElement& o);
  friend VirasoroElement operator+(VirasoroElement a, const VirasoroElement& b) { return a += b; }
  friend VirasoroElement operator-(VirasoroElement a, const VirasoroElement& b) { return a -= b; }
  friend VirasoroElement operator*(const Rational& s, VirasoroElement a);
  friend bool operator==(const VirasoroElement& a, const VirasoroElement& b) {
    return a.modes == b.modes && a.central == b.central;
  }

  std::string to_string() const;
  Json to_json() const;
};

/// [L_n, L_m] = (n - m) L_{n+m} + (n^3 - n)/12 delta_{n,-m} C, extended bilinearly; C is central.
VirasoroElement vir_bracket(const VirasoroElement& a, const VirasoroElement& b);

}  // namespace voa::vir
