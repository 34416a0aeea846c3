#include "voa/cli/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "common.hpp"
#include "voa/core/errors.hpp"

namespace voa::cli {

const std::vector<CommandInfo>& command_registry() {
  static const std::vector<CommandInfo> reg{
      {"lie", "shapovalov", "Shapovalov form of two PBW words, or the matrix and determinant on a weight space",
       {"pbw_normalize", "shapovalov_form", "shapovalov_determinant"}},
      {"lie", "hc", "Harish-Chandra projection of a PBW word and the infinitesimal character at a weight",
       {"pbw_normalize", "hc_project", "infinitesimal_character"}},
      {"vir", "bracket", "Bracket of two Virasoro elements, optionally applied to a Verma basis vector",
       {"vir_bracket", "act"}},
      {"vir", "gram", "Gram matrix, determinant, pivots and null vectors of a Verma level",
       {"gram_matrix", "det_exact", "kernel_basis", "partitions_of", "act"}},
      {"vir", "unitary", "Unitarity class of a highest weight (c, h)", {"classify_unitary"}},
      {"vir", "jantzen", "Jantzen filtration dimensions of a Verma level", {"jantzen_filtration", "t_valuations"}},
      {"vir", "character", "Graded dimensions of a Verma module", {"graded_character", "partitions_of"}},
      {"fock", "act", "Heisenberg modes and normally ordered squares on a Fock vector",
       {"heis_act", "normal_order"}},
      {"fock", "translation-check", "Translation and vacuum axioms on the Heisenberg vertex algebra",
       {"check_translation_axiom", "fock_vertex_operator"}},
      {"fock", "locality", "Locality order of two Heisenberg vertex operators",
       {"locality_check", "fock_vertex_operator"}},
      {"affine", "bracket", "Bracket of two loop generators in the affine algebra", {"affine_bracket"}},
      {"affine", "sugawara", "Virasoro relations of the Sugawara modes on a vacuum module",
       {"sugawara_modes", "check_virasoro_of_sugawara"}},
      {"affine", "critical-check", "Centrality of the Sugawara modes at a level", {"check_virasoro_of_sugawara"}},
      {"oper", "shape", "Oper shape of a connection matrix", {"oper_shape_check"}},
      {"oper", "companion", "Companion form of an oper connection, after an optional gauge",
       {"gauge_transform", "to_companion"}},
      {"oper", "miura-compose", "Product of first-order factors and its Miura connection", {"miura_compose"}},
      {"oper", "miura-factor", "Factorization of a scalar operator on a branch of exponents", {"miura_factor"}},
      {"kz", "flatness", "Casimir matrices of a KZ system and the infinitesimal braid relations",
       {"casimir_matrices", "flatness_check"}},
      {"kz", "solve", "Series solution of the reduced KZ equation at 0 or 1",
       {"casimir_matrices", "solve_regular_singular"}},
      {"kz", "associator", "Numerical connection matrix between the solutions at 0 and 1", {"associator"}},
      {"kz", "monodromy", "Monodromy of the reduced KZ solutions around 0", {"monodromy_at_zero"}},
      {"hodge", "weight-filtration", "Monodromy weight filtration of a nilpotent matrix", {"weight_filtration"}},
      {"hodge", "pairing", "Graded pairings induced by an invariant form", {"graded_pairing"}},
      {"hodge", "griffiths", "Griffiths transversality of a filtered connection", {"griffiths_check"}},
      {"hodge", "strictness", "Strictness of the graded maps of a filtered connection", {"strictness_check"}},
      {"hodge", "limit-twist", "Untwisting of a frame by exp(log t N / 2 pi i)", {"limit_twist"}},
  };
  return reg;
}

namespace {

bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (scalar(j) || j.empty()) {
    std::string v = scalar(j) ? scalar_text(j) : j.dump();
    os << csv_field(path) << "," << csv_field(v) << "\n";
    return;
  }
  const std::string prefix = path.empty() ? "" : path + "/";
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + std::to_string(i), os);
  } else {
    for (const auto& [k, v] : j.items()) flatten(v, prefix + k, os);
  }
}

bool inline_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!scalar(x)) return false;
  return true;
}

std::string inline_text(const Json& j) {
  if (scalar(j)) return scalar_text(j);
  if (j.is_object()) return "{}";
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
  return s + "]";
}

void pretty(const Json& j, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (scalar(v) || inline_array(v) || v.empty()) {
        os << pad << k << ": " << inline_text(v) << "\n";
      } else {
        os << pad << k << ":\n";
        pretty(v, indent + 2, os);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (scalar(j[i]) || inline_array(j[i]) || j[i].empty()) {
        os << pad << "- " << inline_text(j[i]) << "\n";
      } else {
        os << pad << "[" << i << "]\n";
        pretty(j[i], indent + 2, os);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

Json error_object(const std::string& code, const std::string& message) {
  return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

}  // namespace

std::string render(const Json& report, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    os << "path,value\n";
    flatten(report, "", os);
  } else if (format == "pretty") {
    pretty(report, 0, os);
  } else {
    os << report.dump(2) << "\n";
  }
  return os.str();
}

namespace detail {

CLI::App* leaf(CLI::App* group, const std::string& name) {
  for (const auto& c : command_registry())
    if (c.group == group->get_name() && c.name == name) return group->add_subcommand(name, c.summary);
  throw std::logic_error("unregistered subcommand " + group->get_name() + " " + name);
}

void bind(CLI::App* sub, Session& s, Action body) {
  sub->callback([&s, body = std::move(body)] { s.action = body; });
}

const CLI::Validator& rational_text() {
  static const CLI::Validator v(
      [](std::string& text) {
        try {
          parse_rational(text);
          return std::string();
        } catch (const std::exception&) {
          return "not a rational number: " + text;
        }
      },
      "RATIONAL");
  return v;
}

Rational rational(const std::string& text) { return parse_rational(text); }

std::vector<Rational> rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const auto& t : texts) out.push_back(parse_rational(t));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

lie::AlgebraPtr algebra_named(const std::string& name) {
  if (name == "sl2") return lie::FiniteLieAlgebra::sl2();
  if (name == "sl3") return lie::FiniteLieAlgebra::sl3();
  return lie::FiniteLieAlgebra::from_json(read_json_file(name));
}

Json dense_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace detail

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Session s;
  CLI::App app{"Exact computations for vertex algebras, opers, KZ equations and Hodge filtrations", "voa_lab"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--seed", s.seed, "Seed for randomized inputs")->capture_default_str();
  detail::add_lie(app, s);
  detail::add_vir(app, s);
  detail::add_fock(app, s);
  detail::add_affine(app, s);
  detail::add_oper(app, s);
  detail::add_kz(app, s);
  detail::add_hodge(app, s);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  std::string code, message;
  try {
    out << render(s.action(), s.format);
    return 0;
  } catch (const Error& e) {
    code = e.code();
    message = e.what();
  } catch (const nlohmann::json::exception& e) {
    code = "parse";
    message = e.what();
  }
  out << render(error_object(code, message), s.format);
  err << "error: " << message << "\n";
  return 1;
}

}  // namespace voa::cli
