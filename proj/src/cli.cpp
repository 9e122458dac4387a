// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include "xeop/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xeop/eigensolve.hpp"
#include "xeop/error.hpp"
#include "xeop/verify.hpp"

namespace xeop {

namespace {

struct Options {
  ModelConfig model;
  bool model_given = false;
  int levels = 5;
  std::string format;
  std::string out_path;
  std::string suite = "all";
  bool exact_gpt = false;
  std::string what;
  std::optional<int> n;
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw ParameterError("cannot open output file '" + o.out_path + "'");
  file << text;
  if (!file) throw ParameterError("failed writing output file '" + o.out_path + "'");
}

template <class Model>
std::vector<std::vector<double>> spectrum_rows(const Model& M, const RadialGrid& grid, int levels) {
  const auto result = solve_lowest(solver_potential(M), grid, levels);
  std::vector<std::vector<double>> rows;
  for (int n = 0; n < levels; ++n) {
    double exact = 0.0;
    if constexpr (std::is_same_v<Model, GptModel>) {
      exact = gpt_energy(M, n);
    } else {
      exact = oscillator_energy(M, n);
    }
    rows.push_back({static_cast<double>(n), exact, result.eigenvalues[n], std::abs(result.eigenvalues[n] - exact)});
  }
  return rows;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  if (o.levels < 1 || o.levels > 12) throw ParameterError("--levels must be in [1, 12]");
  const auto grid = make_grid(o.model);
  std::vector<std::vector<double>> rows;
  if (o.model.family == Family::oscillator) {
    rows = spectrum_rows(make_oscillator(o.model), grid, o.levels);
  } else {
    const auto M = make_gpt(o.model);
    check_pole_free(M, grid);
    rows = spectrum_rows(M, grid, std::min(o.levels, M.params().n_max + 1));
  }
  const std::vector<std::string> header{"n", "E_analytic", "E_numeric", "abs_error"};
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["family"] = o.model.family == Family::oscillator ? "oscillator" : "gpt";
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      j["rows"].push_back({{header[0], static_cast<int>(row[0])},
                           {header[1], row[1]},
                           {header[2], row[2]},
                           {header[3], row[3]}});
    }
    emit(o, j.dump(2) + "\n", out);
  } else {
    emit(o, csv_table(header, rows), out);
  }
  return kExitOk;
}

int cmd_curve(const Options& o, std::ostream& out) {
  if (o.what == "chi" && !o.n) throw ParameterError("--n is required for --what chi");
  const auto grid = make_grid(o.model);
  RealFunction f;
  if (o.model.family == Family::oscillator) {
    const auto M = make_oscillator(o.model);
    if (o.what == "potential") {
      f = solver_potential(M);
    } else {
      const int n = *o.n;
      if (n < 0) throw IndexError("--n must be >= 0");
      const double norm = oscillator_norm_constant(M, n);
      f = [M, n, norm](double r) { return norm * oscillator_chi(M, n, r); };
    }
  } else {
    const auto M = make_gpt(o.model);
    check_pole_free(M, grid);
    if (o.what == "potential") {
      f = solver_potential(M);
    } else {
      const int n = *o.n;
      gpt_energy(M, n);  // rejects n > n_max before any work
      const double norm = chi_numeric_norm_constant(M, n);
      f = [M, n, norm](double r) { return norm * gpt_chi(M, n, r); };
    }
  }
  const auto values = sample_on_grid(f, grid);
  std::vector<std::vector<double>> rows(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = {grid.node(i), values[i]};
  emit(o, csv_table({"r", "value"}, rows), out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions options;
  if (o.model_given || o.exact_gpt) options.model = o.model;
  if (o.exact_gpt) {
    if (o.model_given && o.model.family != Family::gpt) throw ParameterError("--exact-gpt requires --family gpt");
    if (!o.model_given) {
      options.model->family = Family::gpt;
      options.model->D = 4;
    }
    options.exact_gpt = true;
  }
  const auto report = run_suite(o.suite, options);
  emit(o, o.format == "csv" ? to_csv(report) : to_json(report), out);
  return report.pass() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Rationally extended oscillator and Poschl-Teller potentials: spectra, curves, verification", "xeop"};
  app.require_subcommand(1);

  const std::map<std::string, Family> families{{"oscillator", Family::oscillator}, {"gpt", Family::gpt}};
  std::vector<CLI::Option*> model_flags;
  auto add_model_flags = [&](CLI::App* sub) {
    model_flags.push_back(sub->add_option("--family", o.model.family, "oscillator or gpt")
                              ->transform(CLI::CheckedTransformer(families, CLI::ignore_case)));
    model_flags.push_back(sub->add_option("--m", o.model.m, "codimension m"));
    model_flags.push_back(sub->add_option("--D", o.model.D, "dimension D"));
    model_flags.push_back(sub->add_option("--l", o.model.l, "angular momentum l"));
    model_flags.push_back(sub->add_option("--omega", o.model.omega, "oscillator frequency"));
    model_flags.push_back(sub->add_option("--A", o.model.A, "GPT parameter A"));
    model_flags.push_back(sub->add_option("--B", o.model.B, "GPT parameter B"));
    model_flags.push_back(sub->add_option("--rmin", o.model.r_min, "grid start"));
    model_flags.push_back(sub->add_option("--rmax", o.model.r_max, "grid end"));
    model_flags.push_back(sub->add_option("--points", o.model.points, "grid size"));
    sub->add_option("--out", o.out_path, "output file (default stdout)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "analytic vs finite-difference energies");
  add_model_flags(spectrum);
  spectrum->add_option("--levels", o.levels, "number of levels (1..12)");
  spectrum->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* curve = app.add_subcommand("curve", "potential or normalized chi on the grid, as CSV");
  add_model_flags(curve);
  curve->add_option("--what", o.what, "potential or chi")->required()->check(CLI::IsMember({"potential", "chi"}));
  curve->add_option("--n", o.n, "state index for chi");
  curve->add_option("--format", o.format, "csv only")->check(CLI::IsMember({"csv"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite, report as JSON");
  add_model_flags(verify);
  verify->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_flag("--exact-gpt", o.exact_gpt, "shape invariance of the unapproximated GPT potential");
  verify->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  o.model_given = std::any_of(model_flags.begin(), model_flags.end(),
                              [](const CLI::Option* opt) { return opt->count() > 0; });

  try {
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (curve->parsed()) return cmd_curve(o, out);
    return cmd_verify(o, out);
  } catch (const PoleError& e) {
    err << "xeop: pole: " << e.what() << "\n";
    return kExitPole;
  } catch (const ParameterError& e) {
    err << "xeop: invalid parameters: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IndexError& e) {
    err << "xeop: invalid parameters: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "xeop: invalid parameters: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "xeop: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace xeop
