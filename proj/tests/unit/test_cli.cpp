#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "voa/cli/cli.hpp"

using namespace voa;
using voa::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Splits on spaces, keeping double-quoted groups together; "@" names the fixture directory.
std::vector<std::string> split_command(const std::string& line) {
  std::vector<std::string> args;
  std::string cur;
  bool quoted = false, any = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      any = true;
    } else if (c == ' ' && !quoted) {
      if (any) args.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += c;
      any = true;
    }
  }
  if (any) args.push_back(cur);
  for (auto& a : args)
    if (a.rfind("@/", 0) == 0) a = std::string(VOA_FIXTURES) + a.substr(1);
  return args;
}

std::vector<std::string> fixture_commands() {
  std::ifstream in(std::string(VOA_FIXTURES) + "/determinism.txt");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("every library operation is reachable from a registered subcommand") {
  const std::set<std::string> operations{
      "det_exact", "kernel_basis", "partitions_of", "t_valuations",
      "pbw_normalize", "hc_project", "shapovalov_form", "shapovalov_determinant", "infinitesimal_character",
      "vir_bracket", "act", "gram_matrix", "classify_unitary", "jantzen_filtration", "graded_character",
      "heis_act", "normal_order", "check_translation_axiom", "affine_bracket", "sugawara_modes",
      "check_virasoro_of_sugawara", "locality_check", "fock_vertex_operator",
      "oper_shape_check", "gauge_transform", "to_companion", "miura_compose", "miura_factor",
      "casimir_matrices", "flatness_check", "solve_regular_singular", "associator", "monodromy_at_zero",
      "weight_filtration", "graded_pairing", "griffiths_check", "strictness_check", "limit_twist"};
  std::set<std::string> covered;
  for (const auto& c : cli::command_registry())
    for (const auto& op : c.operations) {
      CHECK_MESSAGE(operations.count(op), "registry names an unknown operation: " << op);
      covered.insert(op);
    }
  for (const auto& op : operations) CHECK_MESSAGE(covered.count(op), "no subcommand reaches " << op);
}

TEST_CASE("the registry matches the subcommand tree") {
  const std::set<std::pair<std::string, std::string>> tree{
      {"lie", "shapovalov"},       {"lie", "hc"},
      {"vir", "bracket"},          {"vir", "gram"},
      {"vir", "unitary"},          {"vir", "jantzen"},
      {"vir", "character"},        {"fock", "act"},
      {"fock", "translation-check"}, {"fock", "locality"},
      {"affine", "bracket"},       {"affine", "sugawara"},
      {"affine", "critical-check"}, {"oper", "shape"},
      {"oper", "companion"},       {"oper", "miura-compose"},
      {"oper", "miura-factor"},    {"kz", "flatness"},
      {"kz", "solve"},             {"kz", "associator"},
      {"kz", "monodromy"},         {"hodge", "weight-filtration"},
      {"hodge", "pairing"},        {"hodge", "griffiths"},
      {"hodge", "strictness"},     {"hodge", "limit-twist"}};
  std::set<std::pair<std::string, std::string>> registered;
  for (const auto& c : cli::command_registry()) {
    registered.insert({c.group, c.name});
    auto r = invoke({c.group, c.name, "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find(c.summary) != std::string::npos);
  }
  CHECK(registered == tree);
  CHECK(invoke({"vir", "nonsense"}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({}).code == 2);
}

TEST_CASE("gram example: exact 2x2 matrix and determinant") {
  auto r = invoke({"vir", "gram", "--c", "1/2", "--h", "1/16", "--level", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  // <L-2 v, L-2 v> = 4h + c/2, <L-2 v, L-1^2 v> = 6h, <L-1^2 v, L-1^2 v> = 4h(2h + 1)
  CHECK(j["gram"] == Json::parse(R"([["1/2", "3/8"], ["3/8", "9/32"]])"));
  CHECK(j["det"] == "0");  // 1/2 * 9/32 - (3/8)^2
  CHECK(j["null_vectors"].size() == 1);
  CHECK(j["null_vectors"][0]["singular"] == true);

  auto k = Json::parse(invoke({"vir", "gram", "--c", "1", "--h", "1", "--level", "2"}).out);
  CHECK(k["det"] == "18");  // 9/2 * 12 - 6^2 at c = h = 1
}

TEST_CASE("usage and help exit codes") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"--help"}).out.find("vir") != std::string::npos);
  CHECK(invoke({"vir", "gram", "--level", "-1"}).code == 2);
  CHECK(invoke({"vir", "gram", "--c", "1/2", "--h", "1/16", "--level", "-1"}).code == 2);
  CHECK(invoke({"vir", "gram", "--c", "x", "--h", "0", "--level", "1"}).code == 2);
  CHECK(invoke({"vir", "gram", "--c", "1", "--h", "0", "--level", "1", "--bogus"}).code == 2);
  CHECK(invoke({"vir", "gram", "--c", "1", "--h", "0", "--level", "1", "--format", "xml"}).code == 2);
}

TEST_CASE("domain errors produce an error object and exit 1") {
  auto r = invoke({"lie", "hc", "--element", "e f", "--weight", "1"});
  CHECK(r.code == 1);
  auto j = Json::parse(r.out);
  CHECK(j["error"]["code"] == "not_central");
  CHECK_FALSE(j["error"]["message"].get<std::string>().empty());
  CHECK_FALSE(r.err.empty());

  auto crit = invoke({"affine", "sugawara", "--level", "-2", "--show-modes"});
  CHECK(crit.code == 1);
  CHECK(Json::parse(crit.out)["error"]["code"] == "critical_level");

  auto csv = invoke({"--format", "csv", "lie", "hc", "--element", "e", "--weight", "1"});
  CHECK(csv.code == 1);
  CHECK(csv.out.find("error/code,not_central") != std::string::npos);

  auto missing = invoke({"hodge", "griffiths", "--connection", "/nonexistent.json"});
  CHECK(missing.code == 2);
}

TEST_CASE("spot values through the front end") {
  auto compose = Json::parse(invoke(split_command("oper miura-compose --chis @/chis.json")).out);
  CHECK(compose["text"] == "d^2 - (2*t^(-2))");  // (d - 1/t)(d + 1/t) = d^2 - 2/t^2

  auto chars = Json::parse(invoke({"vir", "character", "--max", "8"}).out);
  const long long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(chars["character"][static_cast<std::size_t>(n)]["dim"] == p[n]);

  auto hc = Json::parse(invoke({"lie", "hc", "--casimir", "--weight", "1"}).out);
  CHECK(hc["infinitesimal_character"] == "3/2");  // (lambda, lambda + 2 rho) = 1/2 + 1 at lambda = 1

  // the bundled table file loads to the same algebra as the built-in one
  auto file = invoke(split_command("lie hc --algebra @/../../data/sl3.json --casimir --weight 1,0"));
  auto builtin = invoke({"lie", "hc", "--algebra", "sl3", "--casimir", "--weight", "1,0"});
  CHECK(file.code == 0);
  CHECK(file.out == builtin.out);
  CHECK(Json::parse(builtin.out)["infinitesimal_character"] == "8/3");  // (omega_1, omega_1 + 2 rho) = 2/3 + 2

  auto loc = Json::parse(invoke({"fock", "locality", "--a", "1", "--b", "1"}).out);
  CHECK(loc["order"] == 2);

  auto flat = Json::parse(invoke({"kz", "flatness", "--dims", "2,2,2,2"}).out);
  CHECK(flat["flat"] == true);
  CHECK(flat["checks"] == 15);

  auto assoc = Json::parse(invoke({"kz", "associator", "--order", "24"}).out);
  CHECK(assoc.contains("error_estimate"));

  auto pretty = invoke({"--format", "pretty", "vir", "unitary", "--c", "1/2", "--h", "1/16"});
  CHECK(pretty.out.find("kind: discrete-series") != std::string::npos);
}

TEST_CASE("repeated invocations are byte-identical") {
  auto commands = fixture_commands();
  REQUIRE(commands.size() >= 26);
  std::set<std::string> seen;
  for (const auto& line : commands) {
    auto args = split_command(line);
    seen.insert(args.at(0) + " " + args.at(1));
    for (const std::string format : {"json", "csv", "pretty"}) {
      auto full = args;
      full.push_back("--format");
      full.push_back(format);
      auto first = invoke(full);
      CHECK_MESSAGE(first.code == 0, line << ": " << first.out << first.err);
      for (int k = 0; k < 2; ++k) CHECK_MESSAGE(invoke(full).out == first.out, line);
    }
  }
  for (const auto& c : cli::command_registry()) CHECK_MESSAGE(seen.count(c.group + " " + c.name), c.group << " " << c.name);
}
