#include "voa/fock/fock.hpp"

#include <mutex>
#include <sstream>

#include "voa/core/errors.hpp"

namespace voa::fock {

namespace {

void add(FockVector& v, const Partition& p, const Rational& c) {
  if (voa::is_zero(c)) return;
  auto [it, inserted] = v.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (voa::is_zero(it->second)) v.erase(it);
  }
}

int degree_of(const FockVector& v) {
  std::optional<int> d;
  for (const auto& [p, c] : v) {
    if (d && *d != p.weight()) throw UnsupportedStateError("state is not homogeneous");
    d = p.weight();
  }
  return d.value_or(0);
}

// Modes of the (p-1)-st divided derivative of a(z): A_(n) = binom(p - n - 2, p - 1) a_{n-p+1}.
Rational derivative_coeff(int p, int n) { return binomial(Rational(p - n - 2), static_cast<unsigned>(p - 1)); }

FockVector derivative_mode(int p, int n, const FockVector& v) {
  Rational c = derivative_coeff(p, n);
  if (voa::is_zero(c)) return {};
  FockVector out;
  for (const auto& [b, x] : heis_act(n - p + 1, v)) add(out, b, c * x);
  return out;
}

// :B C:_(n) = sum_{m <= -1} B_(m) C_(n-m-1) + sum_{m >= 0} C_(n-m-1) B_(m), B and C derivative fields.
FockVector quadratic_mode(int p, int q, int n, const FockVector& v) {
  const int d = degree_of(v);
  FockVector out;
  for (int m = n - q - d - 1; m <= -1; ++m)
    for (const auto& [b, x] : derivative_mode(p, m, derivative_mode(q, n - m - 1, v))) add(out, b, x);
  for (int m = 0; m <= d + p; ++m)
    for (const auto& [b, x] : derivative_mode(q, n - m - 1, derivative_mode(p, m, v))) add(out, b, x);
  return out;
}

QMatrix matrix_of(const std::function<FockVector(const FockVector&)>& op, int from, int to) {
  const auto& src = fock_basis(from);
  QMatrix m(fock_basis(to).size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    FockVector image = op(FockVector{{src[j], Rational(1)}});
    QVector col = fock_coordinates(image, to);
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace

FockVector heis_act(const HeisenbergMode& mode, const FockVector& v, const Rational& eta) {
  if (mode.central) return v;
  return heis_act(mode.n, v, eta);
}

FockVector heis_act(int n, const FockVector& v, const Rational& eta) {
  FockVector out;
  for (const auto& [p, c] : v) {
    if (n < 0) {
      add(out, p.with_part(-n), c);
    } else if (n == 0) {
      add(out, p, eta * c);
    } else {
      int mult = p.multiplicity(n);
      if (mult > 0) add(out, p.without_part(n), c * n * mult);
    }
  }
  return out;
}

const std::vector<Partition>& fock_basis(int degree) {
  static std::mutex m;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(m);
  auto it = cache.find(degree);
  if (it == cache.end()) it = cache.emplace(degree, degree < 0 ? std::vector<Partition>{} : partitions_of(degree)).first;
  return it->second;
}

QVector fock_coordinates(const FockVector& v, int degree) {
  const auto& basis = fock_basis(degree);
  QVector out(basis.size());
  for (const auto& [p, c] : v) {
    if (p.weight() != degree) throw ShapeError("vector has components outside degree " + std::to_string(degree));
    auto it = std::lower_bound(basis.begin(), basis.end(), p, [](const Partition& a, const Partition& b) { return a > b; });
    out[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return out;
}

FockVector fock_vector(const QVector& coords, int degree) {
  const auto& basis = fock_basis(degree);
  if (coords.size() != basis.size()) throw ShapeError("coordinate vector has the wrong length");
  FockVector out;
  for (std::size_t i = 0; i < coords.size(); ++i) add(out, basis[i], coords[i]);
  return out;
}

QMatrix heis_matrix(int n, int degree, const Rational& eta) {
  return matrix_of([&](const FockVector& v) { return heis_act(n, v, eta); }, degree, degree - n);
}

std::pair<int, int> normal_order(int k, int l) {
  if (l == -k && k >= 0) return {l, k};
  return {k, l};
}

FockVector normal_ordered_square(int n, const FockVector& v, const Rational& eta) {
  const int d = degree_of(v);
  FockVector out;
  for (int k = -d - std::abs(n); k <= d + std::abs(n); ++k) {
    auto [first, second] = normal_order(k, n - k);
    for (const auto& [b, x] : heis_act(first, heis_act(second, v, eta), eta)) add(out, b, x);
  }
  return out;
}

FockVector translation(const FockVector& v) {
  FockVector out;
  for (const auto& [p, c] : v) {
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0 && parts[i] == parts[i - 1]) continue;
      int part = parts[i];
      int mult = p.multiplicity(part);
      add(out, p.without_part(part).with_part(part + 1), c * part * mult);
    }
  }
  return out;
}

AxiomReport check_translation_axiom(int degree_cap, const TranslationFn& T, const std::vector<GradedField>& extra) {
  AxiomReport r;
  FockVector vac{{Partition(), Rational(1)}};
  ++r.checks;
  if (!T(vac).empty()) {
    r.passed = false;
    r.witness = "T|0> != 0";
    return r;
  }
  std::vector<GradedField> fields{fock_vertex_operator(FockVector{{Partition({1}), Rational(1)}})};
  fields.insert(fields.end(), extra.begin(), extra.end());
  for (const auto& a : fields)
    for (int d = 0; d <= degree_cap; ++d) {
      QMatrix t_in = matrix_of(T, d, d + 1);
      for (int n = -degree_cap; n <= degree_cap; ++n) {
        int out = a.target_degree(n, d);
        if (out < -1) continue;
        QMatrix t_out = matrix_of(T, out, out + 1);
        // [T, A_(n)] = -n A_(n-1), both sides from degree d to out + 1
        QMatrix lhs = t_out * a.mode(n, d) - a.mode(n, d + 1) * t_in;
        QMatrix rhs = Rational(-n) * a.mode(n - 1, d);
        ++r.checks;
        if (lhs != rhs) {
          r.passed = false;
          r.witness = "field " + a.symbol() + ", n=" + std::to_string(n) + ", degree=" + std::to_string(d);
          return r;
        }
      }
    }
  return r;
}

GradedField fock_vertex_operator(const FockVector& v) {
  if (v.empty()) throw UnsupportedStateError("zero state has no distinguished weight");
  const int weight = degree_of(v);
  auto dim = [](int d) { return fock_basis(d).size(); };
  std::optional<GradedField> total;
  for (const auto& [p, c] : v) {
    std::function<FockVector(int, const FockVector&)> op;
    std::string sym;
    const auto& parts = p.parts();
    if (parts.empty()) {
      op = [](int n, const FockVector& x) { return n == -1 ? x : FockVector{}; };
      sym = "Id";
    } else if (parts.size() == 1) {
      int q = parts[0];
      op = [q](int n, const FockVector& x) { return derivative_mode(q, n, x); };
      sym = "Y(a_{-" + std::to_string(q) + "}|0>)";
    } else if (parts.size() == 2) {
      int q1 = parts[0], q2 = parts[1];
      op = [q1, q2](int n, const FockVector& x) { return quadratic_mode(q1, q2, n, x); };
      sym = ":Y(a_{-" + std::to_string(q1) + "}|0>) Y(a_{-" + std::to_string(q2) + "}|0>):";
    } else {
      throw UnsupportedStateError("vertex operators are implemented for states with at most two creation modes");
    }
    GradedField f(sym, weight, dim, [op, weight](int n, int d, const QVector& x) {
      return fock_coordinates(op(n, fock_vector(x, d)), d + weight - n - 1);
    });
    GradedField scaled = c == 1 ? f : c * f;
    total = total ? *total + scaled : scaled;
  }
  return *total;
}

std::string to_string(const FockVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : v) {
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) os << voa::to_string(mag) << "*";
    for (std::size_t i = 0; i < p.parts().size();) {
      int part = p.parts()[i];
      int mult = p.multiplicity(part);
      os << "a_{-" << part << "}";
      if (mult > 1) os << "^" << mult;
      i += static_cast<std::size_t>(mult);
    }
    os << "|0>";
  }
  return os.str();
}

Json to_json(const FockVector& v) {
  Json terms = Json::array();
  for (const auto& [p, c] : v) terms.push_back({{"partition", p.parts()}, {"coeff", voa::to_json(c)}});
  return Json{{"terms", terms}, {"text", to_string(v)}};
}

}  // namespace voa::fock
