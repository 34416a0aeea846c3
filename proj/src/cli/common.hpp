#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "voa/cli/cli.hpp"
#include "voa/core/matrix.hpp"
#include "voa/lie/algebra.hpp"

namespace voa::cli::detail {

using Action = std::function<Json()>;

struct Session {
  std::string format = "json";
  std::uint64_t seed = 0;
  Action action;
};

/// Creates the leaf `name` under `group` with the summary from the registry.
CLI::App* leaf(CLI::App* group, const std::string& name);

/// Installs `body` as the action run after a successful parse of `sub`.
void bind(CLI::App* sub, Session& s, Action body);

/// Validator accepting "p", "p/q" and decimals.
const CLI::Validator& rational_text();

Rational rational(const std::string& text);
std::vector<Rational> rationals(const std::vector<std::string>& texts);
Json read_json_file(const std::string& path);
/// "sl2", "sl3" or a path to a structure-constant table.
lie::AlgebraPtr algebra_named(const std::string& name);
/// Dense rows of "p/q" strings.
Json dense_json(const QMatrix& m);

void add_lie(CLI::App& app, Session& s);
void add_vir(CLI::App& app, Session& s);
void add_fock(CLI::App& app, Session& s);
void add_affine(CLI::App& app, Session& s);
void add_oper(CLI::App& app, Session& s);
void add_kz(CLI::App& app, Session& s);
void add_hodge(CLI::App& app, Session& s);

}  // namespace voa::cli::detail
