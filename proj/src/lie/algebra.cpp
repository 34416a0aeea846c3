#include "voa/lie/algebra.hpp"

#include <algorithm>
#include <map>

#include "voa/core/errors.hpp"
#include "voa/core/linalg.hpp"

namespace voa::lie {

namespace {

// Same tables as data/sl2.json and data/sl3.json (matrix realization, trace form).
constexpr const char* kSl2Table = R"json({"name":"sl2","generators":[{"name":"f","kind":"lowering","root":[1]},{"name":"h","kind":"cartan","root":[0]},{"name":"e","kind":"raising","root":[1]}],"brackets":[["f","h",{"f":"2"}],["f","e",{"h":"-1"}],["h","e",{"e":"2"}]],"form":[["f","e","1"],["h","h","2"]]})json";
constexpr const char* kSl3Table = R"json({"name":"sl3","generators":[{"name":"f1","kind":"lowering","root":[1,0]},{"name":"f2","kind":"lowering","root":[0,1]},{"name":"f3","kind":"lowering","root":[1,1]},{"name":"h1","kind":"cartan","root":[0,0]},{"name":"h2","kind":"cartan","root":[0,0]},{"name":"e1","kind":"raising","root":[1,0]},{"name":"e2","kind":"raising","root":[0,1]},{"name":"e3","kind":"raising","root":[1,1]}],"brackets":[["f1","f2",{"f3":"-1"}],["f1","h1",{"f1":"2"}],["f1","h2",{"f1":"-1"}],["f1","e1",{"h1":"-1"}],["f1","e3",{"e2":"1"}],["f2","h1",{"f2":"-1"}],["f2","h2",{"f2":"2"}],["f2","e2",{"h2":"-1"}],["f2","e3",{"e1":"-1"}],["f3","h1",{"f3":"1"}],["f3","h2",{"f3":"1"}],["f3","e1",{"f2":"1"}],["f3","e2",{"f1":"-1"}],["f3","e3",{"h1":"-1","h2":"-1"}],["h1","e1",{"e1":"2"}],["h1","e2",{"e2":"-1"}],["h1","e3",{"e3":"1"}],["h2","e1",{"e1":"-1"}],["h2","e2",{"e2":"2"}],["h2","e3",{"e3":"1"}],["e1","e2",{"e3":"1"}]],"form":[["f1","e1","1"],["f2","e2","1"],["f3","e3","1"],["h1","h1","2"],["h1","h2","-1"],["h2","h2","2"]]})json";

GeneratorKind parse_kind(const std::string& s) {
  if (s == "lowering" || s == "f") return GeneratorKind::Lowering;
  if (s == "cartan" || s == "h") return GeneratorKind::Cartan;
  if (s == "raising" || s == "e") return GeneratorKind::Raising;
  throw ParseError("unknown generator kind: " + s);
}

std::string kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Lowering: return "lowering";
    case GeneratorKind::Cartan: return "cartan";
    case GeneratorKind::Raising: return "raising";
  }
  return "";
}

int block(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Lowering: return 0;
    case GeneratorKind::Cartan: return 1;
    case GeneratorKind::Raising: return 2;
  }
  return 0;
}

}  // namespace

FiniteLieAlgebra::FiniteLieAlgebra(std::string name, std::vector<Generator> generators,
                                   std::vector<std::vector<QVector>> brackets, QMatrix form)
    : name_(std::move(name)), generators_(std::move(generators)), brackets_(std::move(brackets)), form_(std::move(form)) {
  const std::size_t n = generators_.size();
  if (brackets_.size() != n || form_.rows() != n || form_.cols() != n)
    throw ShapeError("structure table does not match generator count");
  for (const auto& row : brackets_) {
    if (row.size() != n) throw ShapeError("structure table does not match generator count");
    for (const auto& v : row)
      if (v.size() != n) throw ShapeError("structure table does not match generator count");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (generators_[i].kind == GeneratorKind::Cartan) cartan_.push_back(i);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return block(generators_[a].kind) < block(generators_[b].kind);
  });
  pbw_position_.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) pbw_position_[order[p]] = p;

  sigma_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (generators_[i].kind == GeneratorKind::Cartan) {
      sigma_[i] = i;
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      bool opposite = (generators_[j].kind != GeneratorKind::Cartan) && (generators_[j].kind != generators_[i].kind);
      if (opposite && generators_[j].root == generators_[i].root) sigma_[i] = j;
    }
    if (sigma_[i] == n) throw DomainError("generator " + generators_[i].name + " has no opposite root vector");
  }

  validate();

  dual_ = inverse(form_);
  rho_.assign(cartan_.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (generators_[i].kind != GeneratorKind::Raising) continue;
    for (std::size_t c = 0; c < cartan_.size(); ++c) rho_[c] += root_value(i, c) / 2;
  }
  // Casimir sum_{a,b} dual(a,b) ad(x_a) ad(x_b) acts on the adjoint module by 2 h^vee.
  QMatrix cas(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!is_zero(dual_(a, b))) cas += dual_(a, b) * (ad(a) * ad(b));
  dual_coxeter_ = cas(0, 0) / 2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (cas(i, j) != (i == j ? cas(0, 0) : Rational(0)))
        throw DomainError("Casimir is not scalar on the adjoint module; algebra not simple");
}

void FiniteLieAlgebra::validate() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (brackets_[i][j][k] != -brackets_[j][i][k]) throw DomainError("bracket table is not antisymmetric");
  for (std::size_t a : cartan_)
    for (std::size_t b : cartan_)
      for (const auto& x : brackets_[a][b])
        if (!is_zero(x)) throw DomainError("Cartan generators do not commute");
  auto unit = [n](std::size_t i) {
    QVector v(n);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        QVector x = unit(i), y = unit(j), z = unit(k);
        QVector s1 = bracket(x, bracket(y, z));
        QVector s2 = bracket(y, bracket(z, x));
        QVector s3 = bracket(z, bracket(x, y));
        for (std::size_t m = 0; m < n; ++m)
          if (!is_zero(s1[m] + s2[m] + s3[m]))
            throw DomainError("Jacobi identity fails on (" + generators_[i].name + ", " + generators_[j].name + ", " +
                              generators_[k].name + ")");
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (form_(i, j) != form_(j, i)) throw DomainError("invariant form is not symmetric");
      for (std::size_t k = 0; k < n; ++k) {
        // ([x_i, x_j], x_k) = (x_i, [x_j, x_k])
        Rational lhs = 0, rhs = 0;
        for (std::size_t m = 0; m < n; ++m) {
          lhs += brackets_[i][j][m] * form_(m, k);
          rhs += form_(i, m) * brackets_[j][k][m];
        }
        if (lhs != rhs) throw DomainError("form is not invariant");
        // sigma([x_i, x_j]) = [sigma x_j, sigma x_i]
        if (brackets_[i][j][k] != brackets_[sigma_[j]][sigma_[i]][sigma_[k]])
          throw DomainError("sigma is not an anti-automorphism of the table");
      }
    }
}

QVector FiniteLieAlgebra::bracket(const QVector& x, const QVector& y) const {
  const std::size_t n = dim();
  QVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(brackets_[i][j][k])) out[k] += s * brackets_[i][j][k];
    }
  }
  return out;
}

std::size_t FiniteLieAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  throw DomainError("no generator named '" + name + "' in " + name_);
}

Rational FiniteLieAlgebra::root_value(std::size_t i, std::size_t cartan_slot) const {
  // [h_c, x_i] = alpha(h_c) x_i for a root vector x_i.
  return brackets_[cartan_.at(cartan_slot)][i][i];
}

QMatrix FiniteLieAlgebra::ad(std::size_t i) const {
  const std::size_t n = dim();
  QMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = brackets_[i][j][k];
  return m;
}

std::shared_ptr<const FiniteLieAlgebra> FiniteLieAlgebra::from_json(const Json& j) {
  std::vector<Generator> gens;
  for (const auto& g : j.at("generators")) {
    Generator gen{g.at("name").get<std::string>(), parse_kind(g.at("kind").get<std::string>()), {}};
    if (g.contains("root")) gen.root = g.at("root").get<std::vector<int>>();
    gens.push_back(std::move(gen));
  }
  const std::size_t n = gens.size();
  std::size_t root_dim = 0;
  for (const auto& g : gens) root_dim = std::max(root_dim, g.root.size());
  for (auto& g : gens) g.root.resize(root_dim, 0);
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (!idx.emplace(gens[i].name, i).second) throw ParseError("duplicate generator " + gens[i].name);
  }
  auto lookup = [&](const Json& name) {
    auto it = idx.find(name.get<std::string>());
    if (it == idx.end()) throw ParseError("unknown generator " + name.get<std::string>());
    return it->second;
  };
  std::vector<std::vector<QVector>> br(n, std::vector<QVector>(n, QVector(n)));
  for (const auto& b : j.at("brackets")) {
    std::size_t x = lookup(b.at(0)), y = lookup(b.at(1));
    for (const auto& [key, val] : b.at(2).items()) {
      std::size_t z = lookup(Json(key));
      Rational c = rational_from_json(val);
      br[x][y][z] += c;
      br[y][x][z] -= c;
    }
  }
  QMatrix form(n, n);
  for (const auto& f : j.at("form")) {
    std::size_t x = lookup(f.at(0)), y = lookup(f.at(1));
    Rational c = rational_from_json(f.at(2));
    form(x, y) = c;
    form(y, x) = c;
  }
  return std::make_shared<const FiniteLieAlgebra>(j.at("name").get<std::string>(), std::move(gens), std::move(br),
                                                  std::move(form));
}

Json FiniteLieAlgebra::to_json() const {
  Json j;
  j["name"] = name_;
  Json gens = Json::array();
  for (const auto& g : generators_) gens.push_back({{"name", g.name}, {"kind", kind_name(g.kind)}, {"root", g.root}});
  j["generators"] = gens;
  Json br = Json::array();
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = a + 1; b < dim(); ++b) {
      Json terms = Json::object();
      for (std::size_t c = 0; c < dim(); ++c)
        if (!is_zero(brackets_[a][b][c])) terms[generators_[c].name] = voa::to_string(brackets_[a][b][c]);
      if (!terms.empty()) br.push_back(Json::array({generators_[a].name, generators_[b].name, terms}));
    }
  j["brackets"] = br;
  Json form = Json::array();
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = a; b < dim(); ++b)
      if (!is_zero(form_(a, b)))
        form.push_back(Json::array({generators_[a].name, generators_[b].name, voa::to_string(form_(a, b))}));
  j["form"] = form;
  return j;
}

std::shared_ptr<const FiniteLieAlgebra> FiniteLieAlgebra::sl2() {
  static const auto alg = from_json(Json::parse(kSl2Table));
  return alg;
}

std::shared_ptr<const FiniteLieAlgebra> FiniteLieAlgebra::sl3() {
  static const auto alg = from_json(Json::parse(kSl3Table));
  return alg;
}

}  // namespace voa::lie
