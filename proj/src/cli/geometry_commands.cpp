#include <random>

#include "common.hpp"
#include "voa/core/errors.hpp"
#include "voa/core/linalg.hpp"
#include "voa/hodge/connection.hpp"
#include "voa/hodge/weight.hpp"
#include "voa/kz/reduced.hpp"
#include "voa/opers/miura.hpp"

namespace voa::cli::detail {

namespace {

ConnectionMatrix connection_file(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("gamma")) return series_matrix_from_json(j.at("gamma"));
  return series_matrix_from_json(j);
}

std::vector<Series> series_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of series");
  std::vector<Series> out;
  for (const auto& s : j) out.push_back(series_from_json(s));
  return out;
}

Json series_json(const std::vector<Series>& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(to_json(s));
  return j;
}

struct SystemArgs {
  std::vector<int> dims{2, 2, 2};
  std::string kappa = "4";
  std::string system;
};

void system_options(CLI::App* sub, SystemArgs& a) {
  sub->add_option("--dims", a.dims, "dimensions of the sl2 irreps at the marked points")
      ->delimiter(',')
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  sub->add_option("--kappa", a.kappa, "level shift kappa")->check(rational_text())->capture_default_str();
  sub->add_option("--system", a.system, "JSON file {\"A\": matrix, \"B\": matrix} of a reduced system");
}

// Residue Omega_12/kappa at 0 and Omega_23/kappa at 1, unless a file is given.
kz::ReducedKZ reduced_system(const SystemArgs& a) {
  if (!a.system.empty()) return kz::ReducedKZ::from_json(read_json_file(a.system));
  if (a.dims.size() < 3) throw ShapeError("the reduced equation needs at least three points");
  auto sys = kz::casimir_matrices(a.dims, rational(a.kappa));
  return kz::reduce(sys, {0, 1}, {1, 2});
}

QMatrix random_nilpotent(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  QMatrix u(n, n), l = QMatrix::identity(n), r = QMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) u(i, j) = d(rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = d(rng);
      r(j, i) = d(rng);
    }
  QMatrix p = l * r;
  return p * u * inverse(p);
}

}  // namespace

void add_oper(CLI::App& app, Session& s) {
  auto* group = app.add_subcommand("oper", "Opers, companion forms and Miura factorizations");
  group->require_subcommand(1);

  {
    auto path = std::make_shared<std::string>();
    auto* sub = leaf(group, "shape");
    sub->add_option("--connection", *path, "JSON list of rows of series")->required()->check(CLI::ExistingFile);
    bind(sub, s, [path] { return oper_shape_check(connection_file(*path)).to_json(); });
  }

  {
    struct Args {
      std::string connection, gauge;
      std::optional<int> precision;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "companion");
    sub->add_option("--connection", a->connection, "JSON list of rows of series")->required()->check(CLI::ExistingFile);
    sub->add_option("--gauge", a->gauge, "gauge applied first, as rows of series")->check(CLI::ExistingFile);
    sub->add_option("--precision", a->precision, "absolute precision for inversions");
    bind(sub, s, [a] {
      ConnectionMatrix conn = connection_file(a->connection);
      Json j;
      if (!a->gauge.empty()) {
        conn = gauge_transform(connection_file(a->gauge), conn, a->precision);
        j["gauged_connection"] = to_json(conn);
      }
      auto form = to_companion(conn, a->precision);
      j["operator"] = form.op.to_json();
      j["text"] = form.op.to_string();
      j["first_row"] = series_json(form.first_row);
      j["gauge"] = to_json(form.gauge);
      return j;
    });
  }

  {
    auto path = std::make_shared<std::string>();
    auto* sub = leaf(group, "miura-compose");
    sub->add_option("--chis", *path, "JSON list of series chi_1..chi_n")->required()->check(CLI::ExistingFile);
    bind(sub, s, [path] {
      auto chis = series_list(read_json_file(*path));
      auto op = miura_compose(chis);
      return Json{{"operator", op.to_json()}, {"text", op.to_string()}, {"connection", to_json(miura_connection(chis))}};
    });
  }

  {
    struct Args {
      std::string op;
      std::vector<int> exponents;
      std::vector<std::string> residues;
      int window = 8;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "miura-factor");
    sub->add_option("--operator", a->op, "JSON {\"order\": n, \"q\": [series]}")->required()->check(CLI::ExistingFile);
    sub->add_option("--exponents", a->exponents, "lower bounds on the valuations of chi_1..chi_n")
        ->required()
        ->delimiter(',');
    sub->add_option("--residues", a->residues, "residues of the factors with exponent -1, or \"auto\"")
        ->delimiter(',');
    sub->add_option("--window", a->window, "precision of the factors")->check(CLI::Range(1, 64))->capture_default_str();
    bind(sub, s, [a] {
      auto op = MonicDiffOp::from_json(read_json_file(a->op));
      MiuraBranch branch{a->exponents, {}};
      for (const auto& r : a->residues)
        branch.residues.push_back(r == "auto" ? std::nullopt : std::optional<Rational>(rational(r)));
      auto chis = miura_factor(op, branch, a->window);
      return Json{{"operator", op.to_string()}, {"window", a->window}, {"chis", series_json(chis)},
                  {"recomposed", miura_compose(chis).to_string()}};
    });
  }
}

void add_kz(CLI::App& app, Session& s) {
  auto* group = app.add_subcommand("kz", "Knizhnik-Zamolodchikov systems for sl2");
  group->require_subcommand(1);

  {
    struct Args {
      SystemArgs sys;
      bool show = false;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "flatness");
    sub->add_option("--dims", a->sys.dims, "dimensions of the sl2 irreps at the marked points")
        ->delimiter(',')
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    sub->add_option("--kappa", a->sys.kappa, "level shift kappa")->check(rational_text())->capture_default_str();
    sub->add_flag("--show-omega", a->show, "include the Casimir matrices");
    bind(sub, s, [a] {
      auto sys = kz::casimir_matrices(a->sys.dims, rational(a->sys.kappa));
      Json j{{"dims", sys.dims}, {"kappa", to_json(sys.kappa)}, {"space_dim", sys.space_dim()}};
      j.update(kz::flatness_check(sys).to_json());
      if (a->show) j["omega"] = sys.to_json();
      return j;
    });
  }

  {
    struct Args {
      SystemArgs sys;
      int at = 0, order = 8;
      unsigned log_cap = 12;
      std::vector<std::string> w;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "solve");
    system_options(sub, a->sys);
    sub->add_option("--at", a->at, "expansion point")->check(CLI::IsMember({0, 1}))->capture_default_str();
    sub->add_option("--order", a->order, "number of series terms")->check(CLI::Range(0, 64))->capture_default_str();
    sub->add_option("--w", a->w, "leading vector (defaults to the first basis vector)")
        ->delimiter(',')
        ->check(rational_text());
    sub->add_option("--log-cap", a->log_cap, "largest admissible power of log")->capture_default_str();
    bind(sub, s, [a] {
      auto red = reduced_system(a->sys);
      QVector w(red.dim(), Rational(0));
      if (a->w.empty())
        w.at(0) = 1;
      else
        w = rationals(a->w);
      auto sol = kz::solve_regular_singular(red, w, a->order, a->at, a->log_cap);
      bool residual = true;
      for (const auto& e : kz::kz_residual(red, sol.components(), sol.at, sol.order)) residual = residual && e.is_zero();
      Json j = sol.to_json();
      j["residual_vanishes"] = residual;
      return j;
    });
  }

  {
    struct Args {
      SystemArgs sys;
      int order = 24, digits = 20;
      std::string point = "1/2";
      double tolerance = 1e-6;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "associator");
    system_options(sub, a->sys);
    sub->add_option("--order", a->order, "number of series terms")->check(CLI::Range(2, 128))->capture_default_str();
    sub->add_option("--eval", a->point, "evaluation point in (0, 1)")->check(rational_text())->capture_default_str();
    sub->add_option("--digits", a->digits, "significant digits printed")->check(CLI::Range(1, 45))->capture_default_str();
    sub->add_option("--tolerance", a->tolerance, "largest accepted error estimate")->capture_default_str();
    bind(sub, s, [a] {
      return kz::associator(reduced_system(a->sys), a->order, rational(a->point), a->tolerance).to_json(a->digits);
    });
  }

  {
    struct Args {
      SystemArgs sys;
      int order = 8, digits = 20;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "monodromy");
    system_options(sub, a->sys);
    sub->add_option("--order", a->order, "number of series terms")->check(CLI::Range(0, 64))->capture_default_str();
    sub->add_option("--digits", a->digits, "significant digits printed")->check(CLI::Range(1, 45))->capture_default_str();
    bind(sub, s, [a] {
      auto m = kz::monodromy_at_zero(reduced_system(a->sys), a->order);
      Json rows = Json::array();
      for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& z : row)
          r.push_back(Json{{"re", kz::format_real(z.real(), a->digits)}, {"im", kz::format_real(z.imag(), a->digits)}});
        rows.push_back(r);
      }
      return Json{{"order", a->order}, {"monodromy", rows}};
    });
  }
}

void add_hodge(CLI::App& app, Session& s) {
  auto* group = app.add_subcommand("hodge", "Weight filtrations and filtered connections");
  group->require_subcommand(1);

  {
    struct Args {
      std::string matrix;
      std::optional<std::size_t> random;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "weight-filtration");
    auto* m = sub->add_option("--matrix", a->matrix, "JSON nilpotent matrix")->check(CLI::ExistingFile);
    auto* r = sub->add_option("--random", a->random, "use a random nilpotent matrix of this size (see --seed)")
                  ->check(CLI::Range(1, 12));
    m->excludes(r);
    sub->require_option(1);
    bind(sub, s, [a, &s] {
      QMatrix n = a->random ? random_nilpotent(*a->random, s.seed) : matrix_from_json(read_json_file(a->matrix));
      hodge::NilpotentEndo endo(n);
      auto w = hodge::weight_filtration(endo);
      auto props = hodge::check_weight_properties(endo, w);
      Json j{{"matrix", dense_json(n)}, {"index", endo.index()}, {"filtration", w.to_json()},
             {"properties_ok", props.ok}};
      if (!props.ok) j["failure"] = props.failure;
      return j;
    });
  }

  {
    struct Args {
      std::string matrix, form;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "pairing");
    sub->add_option("--matrix", a->matrix, "JSON nilpotent matrix N")->required()->check(CLI::ExistingFile);
    sub->add_option("--form", a->form, "JSON bilinear form B")->required()->check(CLI::ExistingFile);
    bind(sub, s, [a] {
      hodge::NilpotentEndo n(matrix_from_json(read_json_file(a->matrix)));
      return hodge::graded_pairing(matrix_from_json(read_json_file(a->form)), n, hodge::weight_filtration(n)).to_json();
    });
  }

  {
    auto path = std::make_shared<std::string>();
    auto* sub = leaf(group, "griffiths");
    sub->add_option("--connection", *path, "JSON {\"gamma\", \"basis\", \"degrees\"}")->required()->check(CLI::ExistingFile);
    bind(sub, s, [path] {
      return hodge::griffiths_check(hodge::FilteredConnection::from_json(read_json_file(*path))).to_json();
    });
  }

  {
    auto path = std::make_shared<std::string>();
    auto* sub = leaf(group, "strictness");
    sub->add_option("--connection", *path, "JSON {\"gamma\", \"basis\", \"degrees\"}")->required()->check(CLI::ExistingFile);
    bind(sub, s, [path] {
      return hodge::strictness_check(hodge::FilteredConnection::from_json(read_json_file(*path))).to_json();
    });
  }

  {
    struct Args {
      std::string matrix, frame;
    };
    auto a = std::make_shared<Args>();
    auto* sub = leaf(group, "limit-twist");
    sub->add_option("--matrix", a->matrix, "JSON nilpotent matrix N")->required()->check(CLI::ExistingFile);
    sub->add_option("--frame", a->frame, "JSON list of vectors (defaults to the standard basis)")
        ->check(CLI::ExistingFile);
    bind(sub, s, [a] {
      hodge::NilpotentEndo n(matrix_from_json(read_json_file(a->matrix)));
      std::vector<QVector> frame;
      if (a->frame.empty()) {
        for (std::size_t i = 0; i < n.dim(); ++i) {
          QVector e(n.dim(), Rational(0));
          e[i] = 1;
          frame.push_back(e);
        }
      } else {
        for (const auto& v : read_json_file(a->frame)) frame.push_back(vector_from_json(v));
      }
      Json out = Json::array();
      for (const auto& vec : hodge::limit_twist(frame, n)) {
        Json comps = Json::array();
        for (const auto& c : vec) comps.push_back(to_json(c));
        out.push_back(comps);
      }
      return Json{{"twisted_frame", out}};
    });
  }
}

}  // namespace voa::cli::detail
