#include <sstream>

#include "common.hpp"
#include "voa/core/errors.hpp"
#include "voa/core/linalg.hpp"
#include "voa/fock/affine.hpp"
#include "voa/fock/fock.hpp"
#include "voa/lie/pbw.hpp"
#include "voa/lie/shapovalov.hpp"
#include "voa/virasoro/verma.hpp"

namespace voa::cli::detail {

namespace {

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

lie::PBWElement pbw_word(const lie::AlgebraPtr& alg, const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == '*' || ch == ',') ch = ' ';
  std::vector<lie::GeneratorRef> word;
  for (const auto& t : tokens(cleaned))
    if (t != "1") word.push_back({alg, alg->index_of(t)});
  if (word.empty()) return lie::PBWElement::scalar(alg, 1);
  return lie::pbw_normalize(word);
}

Json cartan_text(const MPoly& p, const lie::AlgebraPtr& alg) { return p.to_string(lie::cartan_names(*alg)); }

// "L2 - 1/2*L-1 + 3*C"; terms are separated by whitespace-delimited signs.
vir::VirasoroElement virasoro_element(const std::string& text) {
  vir::VirasoroElement x;
  Rational sign = 1;
  for (const auto& t : tokens(text)) {
    if (t == "+") continue;
    if (t == "-") {
      sign = -sign;
      continue;
    }
    Rational coeff = 1;
    std::string gen = t;
    if (auto star = t.find('*'); star != std::string::npos) {
      coeff = parse_rational(t.substr(0, star));
      gen = t.substr(star + 1);
    }
    coeff *= sign;
    sign = 1;
    if (gen == "C") {
      x += vir::VirasoroElement::C(coeff);
    } else if (gen.size() > 1 && gen[0] == 'L') {
      std::string n = gen.substr(gen[1] == '_' ? 2 : 1);
      try {
        std::size_t used = 0;
        int mode = std::stoi(n, &used);
        if (used != n.size()) throw std::invalid_argument(n);
        x += vir::VirasoroElement::L(mode, coeff);
      } catch (const std::logic_error&) {
        throw ParseError("bad Virasoro mode: " + t);
      }
    } else {
      throw ParseError("expected L<n> or C, got " + t);
    }
  }
  return x;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',') ch = ' ';
  for (const auto& t : tokens(cleaned)) {
    try {
      out.push_back(std::stoi(t));
    } catch (const std::logic_error&) {
      throw ParseError("bad integer: " + t);
    }
  }
  return out;
}

// "1/2:2,1 + 1" is 1/2 a_{-2} a_{-1}|0> + a_{-1}|0>; "vac" is the vacuum.
fock::FockVector fock_state(const std::string& text) {
  fock::FockVector v;
  std::string rest = text;
  std::size_t start = 0;
  while (start <= rest.size()) {
    std::size_t plus = rest.find('+', start);
    std::string term = rest.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    start = plus == std::string::npos ? rest.size() + 1 : plus + 1;
    if (tokens(term).empty()) continue;
    Rational coeff = 1;
    if (auto colon = term.find(':'); colon != std::string::npos) {
      coeff = parse_rational(tokens(term.substr(0, colon)).at(0));
      term = term.substr(colon + 1);
    }
    std::vector<int> parts;
    if (tokens(term) != std::vector<std::string>{"vac"}) parts = int_list(term);
    for (int p : parts)
      if (p <= 0) throw ParseError("creation indices must be positive: " + text);
    Partition key(parts);
    v[key] += coeff;
    if (is_zero(v[key])) v.erase(key);
  }
  return v;
}

template <typename R>
Json verma_json(const vir::VermaVector<R>& v) {
  Json j = Json::object();
  for (const auto& [b, c] : v) j[b.empty() ? "vac" : b.to_string()] = to_json(c);
  return j;
}

std::string basis_text(const Partition& p) {
  if (p.empty()) return "v";
  std::string s;
  for (int part : p.parts()) s += "L-" + std::to_string(part) + " ";
  return s + "v";
}

}  // namespace

void add_lie(CLI::App& app, Session& s) {
  auto* group = app.add_subcommand("lie", "Finite-dimensional Lie algebras and their enveloping algebras");
  group->require_subcommand(1);

  {
    struct Args {
      std::string algebra = "sl2", x, y;
      std::vector<int> beta;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "shapovalov");
    sub->add_option("--algebra", a->algebra, "sl2, sl3 or a structure-constant JSON file")->capture_default_str();
    auto* x = sub->add_option("--x", a->x, "PBW word of lowering generators, e.g. \"f f\"");
    sub->add_option("--y", a->y, "second PBW word")->needs(x);
    auto* beta = sub->add_option("--beta", a->beta, "weight in simple-root coordinates")->delimiter(',');
    x->excludes(beta);
    bind(sub, s, [a] {
      auto alg = algebra_named(a->algebra);
      Json j{{"algebra", alg->name()}};
      if (!a->beta.empty()) {
        auto basis = lie::lowering_basis(alg, a->beta);
        auto m = lie::shapovalov_matrix(alg, a->beta);
        Json names = Json::array(), rows = Json::array();
        for (const auto& b : basis) names.push_back(b.to_string());
        for (std::size_t i = 0; i < m.rows(); ++i) {
          Json r = Json::array();
          for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(cartan_text(m(i, k), alg));
          rows.push_back(r);
        }
        j["beta"] = a->beta;
        j["basis"] = names;
        j["matrix"] = rows;
        j["determinant"] = cartan_text(lie::shapovalov_determinant(alg, a->beta), alg);
        return j;
      }
      if (a->x.empty()) throw DomainError("give --x and --y, or --beta");
      auto x = pbw_word(alg, a->x);
      auto y = pbw_word(alg, a->y.empty() ? a->x : a->y);
      j["x"] = x.to_string();
      j["y"] = y.to_string();
      j["form"] = cartan_text(lie::shapovalov_form(x, y), alg);
      return j;
    });
  }

  {
    struct Args {
      std::string algebra = "sl2", element;
      bool casimir = false;
      std::vector<std::string> weight;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "hc");
    sub->add_option("--algebra", a->algebra, "sl2, sl3 or a structure-constant JSON file")->capture_default_str();
    auto* el = sub->add_option("--element", a->element, "PBW word, e.g. \"e f\"");
    auto* cas = sub->add_flag("--casimir", a->casimir, "use the quadratic Casimir");
    el->excludes(cas);
    sub->add_option("--weight", a->weight, "values of the weight on the Cartan generators")
        ->delimiter(',')
        ->check(rational_text());
    bind(sub, s, [a] {
      auto alg = algebra_named(a->algebra);
      auto z = a->casimir ? lie::casimir(alg) : pbw_word(alg, a->element);
      Json j{{"algebra", alg->name()}, {"element", z.to_string()}, {"central", lie::is_central(z)},
             {"hc_project", cartan_text(lie::hc_project(z), alg)}};
      if (!a->weight.empty()) j["infinitesimal_character"] = to_json(lie::infinitesimal_character(rationals(a->weight), z));
      return j;
    });
  }
}

void add_vir(CLI::App& app, Session& s) {
  auto* group = app.add_subcommand("vir", "Virasoro algebra and Verma modules");
  group->require_subcommand(1);

  {
    struct Args {
      std::string a, b, c = "0", h = "0", on;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "bracket");
    sub->add_option("--a", a->a, "element such as \"L2 - 1/2*L-1 + C\"")->required();
    sub->add_option("--b", a->b, "second element")->required();
    auto* on = sub->add_option("--on", a->on, "apply the bracket to L_{-l1}...L_{-lk} v, given as l1,...,lk or vac");
    sub->add_option("--c", a->c, "central charge for --on")->check(rational_text())->needs(on)->capture_default_str();
    sub->add_option("--h", a->h, "highest weight for --on")->check(rational_text())->needs(on)->capture_default_str();
    bind(sub, s, [a] {
      auto x = vir::vir_bracket(virasoro_element(a->a), virasoro_element(a->b));
      Json j{{"a", virasoro_element(a->a).to_string()}, {"b", virasoro_element(a->b).to_string()}, {"bracket", x.to_json()}};
      if (!a->on.empty()) {
        std::vector<int> parts;
        if (a->on != "vac") parts = int_list(a->on);
        vir::VermaVector<Rational> v{{Partition(parts), Rational(1)}};
        vir::VermaParameters<Rational> p{rational(a->c), rational(a->h)};
        j["c"] = to_json(p.c);
        j["h"] = to_json(p.h);
        j["applied"] = verma_json(vir::act(x, v, p));
      }
      return j;
    });
  }

  {
    struct Args {
      std::string c, h;
      int level = 0;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "gram");
    sub->add_option("--c", a->c, "central charge")->required()->check(rational_text());
    sub->add_option("--h", a->h, "highest weight")->required()->check(rational_text());
    sub->add_option("--level", a->level, "level N")->required()->check(CLI::Range(0, 12));
    bind(sub, s, [a] {
      vir::VermaParameters<Rational> p{rational(a->c), rational(a->h)};
      auto basis = partitions_of(a->level);
      QMatrix g = vir::gram_matrix(p, a->level);
      Json names = Json::array();
      for (const auto& b : basis) names.push_back(basis_text(b));
      auto ldl = ldl_pivots(g);
      Json pivots = Json::array();
      for (const auto& x : ldl.pivots) pivots.push_back(to_json(x));
      Json nulls = Json::array();
      for (const auto& v : kernel_basis(g)) {
        vir::VermaVector<Rational> vec;
        for (std::size_t i = 0; i < v.size(); ++i)
          if (!is_zero(v[i])) vec.emplace(basis[i], v[i]);
        bool singular = vir::act(vir::VirasoroElement::L(1), vec, p).empty() &&
                        vir::act(vir::VirasoroElement::L(2), vec, p).empty();
        nulls.push_back(Json{{"vector", to_json(v)}, {"singular", singular}});
      }
      return Json{{"c", to_json(p.c)},          {"h", to_json(p.h)},         {"level", a->level},
                  {"basis", names},             {"gram", dense_json(g)},     {"det", to_json(det_exact(g))},
                  {"ldl_pivots", pivots},       {"positive_definite", positive_definite(g)},
                  {"null_vectors", nulls}};
    });
  }

  {
    struct Args {
      std::string c, h;
      int m_max = 12;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "unitary");
    sub->add_option("--c", a->c, "central charge")->required()->check(rational_text());
    sub->add_option("--h", a->h, "highest weight")->required()->check(rational_text());
    sub->add_option("--m-max", a->m_max, "largest minimal-model index searched")
        ->check(CLI::Range(3, 200))
        ->capture_default_str();
    bind(sub, s, [a] {
      Rational c = rational(a->c), h = rational(a->h);
      return Json{{"c", to_json(c)}, {"h", to_json(h)},
                  {"classification", vir::classify_unitary(c, h, a->m_max).to_json()}};
    });
  }

  {
    struct Args {
      std::string c, h;
      int level = 0;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "jantzen");
    sub->add_option("--c", a->c, "central charge")->required()->check(rational_text());
    sub->add_option("--h", a->h, "highest weight")->required()->check(rational_text());
    sub->add_option("--level", a->level, "level N")->required()->check(CLI::Range(0, 10));
    bind(sub, s, [a] {
      Rational c = rational(a->c), h = rational(a->h);
      Json j{{"c", to_json(c)}, {"h", to_json(h)}};
      j.update(vir::jantzen_filtration(c, h, a->level).to_json());
      return j;
    });
  }

  {
    auto max = std::make_shared<int>(8);
    auto* sub = leaf(group, "character");
    sub->add_option("--max", *max, "largest level")->check(CLI::Range(0, 60))->capture_default_str();
    bind(sub, s, [max] {
      Json levels = Json::array();
      auto dims = vir::graded_character(*max);
      for (int n = 0; n <= *max; ++n) levels.push_back(Json{{"level", n}, {"dim", dims[static_cast<std::size_t>(n)]}});
      return Json{{"max", *max}, {"character", levels}};
    });
  }
}

void add_fock(CLI::App& app, Session& s) {
  auto* group = app.add_subcommand("fock", "Heisenberg Fock modules and vertex operators");
  group->require_subcommand(1);

  {
    struct Args {
      std::vector<std::string> states;
      std::string eta = "0";
      std::vector<int> modes;
      std::optional<int> square;
      std::vector<int> pair;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "act");
    sub->add_option("--state", a->states, "terms such as \"1/2:2,1\" or \"vac\"; repeated terms are added");
    sub->add_option("--eta", a->eta, "charge of the Fock module")->check(rational_text())->capture_default_str();
    sub->add_option("--mode", a->modes, "Heisenberg modes a_n, the last one listed acts first")->allow_extra_args(false);
    sub->add_option("--square", a->square, "then apply sum_{k+l=n} :a_k a_l:");
    sub->add_option("--pair", a->pair, "report the normal ordering of a_k a_l")->delimiter(',')->expected(2);
    bind(sub, s, [a] {
      Rational eta = rational(a->eta);
      fock::FockVector v;
      for (const auto& t : a->states)
        for (const auto& [b, c] : fock_state(t)) {
          v[b] += c;
          if (is_zero(v[b])) v.erase(b);
        }
      if (a->states.empty()) v[Partition()] = 1;
      Json j{{"eta", to_json(eta)}, {"input", fock::to_string(v)}};
      for (auto it = a->modes.rbegin(); it != a->modes.rend(); ++it) v = fock::heis_act(*it, v, eta);
      if (a->square) v = fock::normal_ordered_square(*a->square, v, eta);
      j["output"] = fock::to_json(v);
      if (a->pair.size() == 2) {
        auto [first, second] = fock::normal_order(a->pair[0], a->pair[1]);
        j["normal_order"] = Json::array({first, second});
      }
      return j;
    });
  }

  {
    struct Args {
      int degree = 4;
      std::vector<std::string> fields;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "translation-check");
    sub->add_option("--degree", a->degree, "degree and mode cap")->check(CLI::Range(0, 8))->capture_default_str();
    sub->add_option("--field", a->fields, "extra states whose vertex operators are checked");
    bind(sub, s, [a] {
      std::vector<fock::FockVector> states{fock_state("1")};
      for (const auto& f : a->fields) states.push_back(fock_state(f));
      std::vector<fock::GradedField> fields;
      Json vacuum = Json::array();
      for (const auto& st : states) {
        if (st.empty()) throw DomainError("field state must be nonzero");
        auto y = fock::fock_vertex_operator(st);
        int w = st.begin()->first.weight();
        vacuum.push_back(Json{{"state", fock::to_string(st)},
                              {"report", fock::check_vacuum_axiom(y, fock::fock_coordinates(st, w)).to_json()}});
        fields.push_back(y);
      }
      std::vector<fock::GradedField> extra(fields.begin() + 1, fields.end());
      return Json{{"degree", a->degree},
                  {"translation", fock::check_translation_axiom(a->degree, fock::translation, extra).to_json()},
                  {"vacuum", vacuum}};
    });
  }

  {
    struct Args {
      std::string a = "1", b = "1";
      int degree = 3, n_cap = 4;
      std::optional<int> mode_cap;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "locality");
    sub->add_option("--a", a->a, "first state, e.g. \"1\" or \"1/2:1,1\"")->capture_default_str();
    sub->add_option("--b", a->b, "second state")->capture_default_str();
    sub->add_option("--degree", a->degree, "degree cap")->check(CLI::Range(0, 8))->capture_default_str();
    sub->add_option("--n-cap", a->n_cap, "largest order tried")->check(CLI::Range(0, 12))->capture_default_str();
    sub->add_option("--mode-cap", a->mode_cap, "mode cap (defaults to the degree cap plus the weights)");
    bind(sub, s, [a] {
      auto ya = fock::fock_vertex_operator(fock_state(a->a));
      auto yb = fock::fock_vertex_operator(fock_state(a->b));
      Json j{{"a", fock::to_string(fock_state(a->a))}, {"b", fock::to_string(fock_state(a->b))}};
      j.update(fock::locality_check(ya, yb, a->degree, a->n_cap, a->mode_cap).to_json());
      return j;
    });
  }
}

void add_affine(CLI::App& app, Session& s) {
  auto* group = app.add_subcommand("affine", "Affine Kac-Moody algebras and Sugawara modes");
  group->require_subcommand(1);

  {
    struct Args {
      std::string algebra = "sl2", x, y;
      int m = 0, n = 0;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "bracket");
    sub->add_option("--algebra", a->algebra, "sl2, sl3 or a structure-constant JSON file")->capture_default_str();
    sub->add_option("--x", a->x, "first generator name")->required();
    sub->add_option("--m", a->m, "power of t on the first generator")->required();
    sub->add_option("--y", a->y, "second generator name")->required();
    sub->add_option("--n", a->n, "power of t on the second generator")->required();
    bind(sub, s, [a] {
      auto alg = algebra_named(a->algebra);
      auto x = fock::AffineElement::loop(alg, alg->index_of(a->x), a->m);
      auto y = fock::AffineElement::loop(alg, alg->index_of(a->y), a->n);
      return Json{{"algebra", alg->name()},
                  {"x", x.to_string()},
                  {"y", y.to_string()},
                  {"bracket", fock::affine_bracket(x, y).to_json()}};
    });
  }

  {
    struct Args {
      std::string algebra = "sl2", level = "1";
      int mode_cap = 2, degree = 3;
      bool show_modes = false;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "sugawara");
    sub->add_option("--algebra", a->algebra, "sl2, sl3 or a structure-constant JSON file")->capture_default_str();
    sub->add_option("--level", a->level, "level k")->check(rational_text())->capture_default_str();
    sub->add_option("--mode-cap", a->mode_cap, "bound on |n| and |m|")->check(CLI::Range(0, 4))->capture_default_str();
    sub->add_option("--degree", a->degree, "degree cap")->check(CLI::Range(0, 6))->capture_default_str();
    sub->add_flag("--show-modes", a->show_modes, "include the matrices of L_n");
    bind(sub, s, [a] {
      fock::VacuumModule v(algebra_named(a->algebra), rational(a->level));
      Json j{{"algebra", v.algebra()->name()}, {"level", to_json(v.level())}};
      j["report"] = fock::check_virasoro_of_sugawara(v, a->mode_cap, a->degree).to_json();
      if (a->show_modes) {
        Json modes = Json::array();
        for (int n = -a->mode_cap; n <= a->mode_cap; ++n)
          for (int d = 0; d <= a->degree; ++d) {
            if (d - n < 0 || d - n > a->degree) continue;
            modes.push_back(Json{{"mode", n}, {"level_in", d}, {"matrix", dense_json(v.sugawara(n, d))}});
          }
        j["modes"] = modes;
      }
      return j;
    });
  }

  {
    struct Args {
      std::string algebra = "sl2";
      std::optional<std::string> level;
      int mode_cap = 2, degree = 3;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "critical-check");
    sub->add_option("--algebra", a->algebra, "sl2, sl3 or a structure-constant JSON file")->capture_default_str();
    sub->add_option("--level", a->level, "level k (defaults to the critical level)")->check(rational_text());
    sub->add_option("--mode-cap", a->mode_cap, "bound on |n| and |m|")->check(CLI::Range(0, 4))->capture_default_str();
    sub->add_option("--degree", a->degree, "degree cap")->check(CLI::Range(0, 6))->capture_default_str();
    bind(sub, s, [a] {
      auto alg = algebra_named(a->algebra);
      Rational k = a->level ? rational(*a->level) : Rational(-alg->dual_coxeter());
      fock::VacuumModule v(alg, k);
      Json j{{"algebra", alg->name()}, {"level", to_json(k)}, {"dual_coxeter", to_json(alg->dual_coxeter())},
             {"critical", v.critical()}};
      j["centrality"] = fock::check_sugawara_centrality(v, a->mode_cap, a->degree).to_json();
      if (!v.critical()) j["virasoro"] = fock::check_virasoro_of_sugawara(v, a->mode_cap, a->degree).to_json();
      return j;
    });
  }
}

}  // namespace voa::cli::detail
