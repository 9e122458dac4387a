// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include "xeop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "xeop/eigensolve.hpp"
#include "xeop/error.hpp"
#include "xeop/orthopoly.hpp"
#include "xeop/quadrature.hpp"
#include "xeop/susyqm.hpp"
#include "xeop/xpoly.hpp"

namespace xeop {

namespace {

constexpr double kSpectrumTol = 5e-3;
constexpr double kOverlapTol = 1e-5;
constexpr double kNormTol = 1e-6;
constexpr double kShapeTol = 1e-8;
constexpr double kExactGptThreshold = 1e-3;
constexpr double kClosedFormTol = 1e-10;
constexpr int kMaxLevels = 5;

// Like std::max but a NaN on either side wins, so it cannot hide in a
// running maximum.
double nan_max(double a, double b) { return (std::isnan(a) || std::isnan(b)) ? std::nan("") : std::max(a, b); }

std::string num(double v) { return format_number(v); }

std::string label(const OscillatorModel& M) {
  return "oscillator/omega=" + num(M.omega()) + "/D=" + std::to_string(M.D()) + "/l=" + std::to_string(M.l()) +
         "/m=" + std::to_string(M.m());
}

std::string label(const GptModel& M) {
  return "gpt/A=" + num(M.A()) + "/B=" + num(M.B()) + "/D=" + std::to_string(M.D()) + "/l=" + std::to_string(M.l()) +
         "/m=" + std::to_string(M.m());
}

std::string n_label(int n) { return "/n=" + std::to_string(n); }

// ------------------------------------------------------------ orthogonality

void xlaguerre_gram(int m, double alpha, VerificationReport& out) {
  const std::string prefix = "orthogonality/xlaguerre/m=" + std::to_string(m) + "/alpha=" + num(alpha);
  for (int n = m; n <= m + 5; ++n) {
    for (int k = n; k <= m + 5; ++k) {
      const XLaguerreSpec a(m, n, alpha);
      const XLaguerreSpec b(m, k, alpha);
      const double scale = std::sqrt(xlaguerre_norm(a) * xlaguerre_norm(b));
      auto f = [&](double g) {
        if (g == 0.0) return 0.0;
        return xlaguerre_weight(m, alpha, g) * xlaguerre_eval(a, g).value * xlaguerre_eval(b, g).value;
      };
      const double value = integrate_semi_infinite(f, 1e-17 * scale);
      const std::string id = prefix + "/n=" + std::to_string(n) + "," + std::to_string(k);
      if (n == k) {
        out.checks.push_back(make_check(id, xlaguerre_norm(a), value, 1e-7, Criterion::relative));
      } else {
        out.checks.push_back(make_check(id, 0.0, std::abs(value) / scale, 1e-8));
      }
    }
  }
}

// Integral over (-1, 1) split at 0 and written in the distance to each end,
// so nodes near g = +-1 keep full relative precision.
template <class F>
double integrate_jacobi(F&& f) {
  const QuadratureRule rule{.panels = 8, .grading = Grading::left};
  const double right = integrate([&](double u) { return f(1.0 - u, u, 2.0 - u); }, 0.0, 1.0, rule);
  const double left = integrate([&](double v) { return f(-1.0 + v, 2.0 - v, v); }, 0.0, 1.0, rule);
  return left + right;
}

void xjacobi_gram(int m, double alpha, double beta, VerificationReport& out) {
  const std::string prefix =
      "orthogonality/xjacobi/m=" + std::to_string(m) + "/alpha=" + num(alpha) + "/beta=" + num(beta);
  for (int n = m; n <= m + 5; ++n) {
    for (int k = n; k <= m + 5; ++k) {
      const XJacobiSpec a(m, n, alpha, beta);
      const XJacobiSpec b(m, k, alpha, beta);
      const double scale = std::sqrt(xjacobi_norm(a) * xjacobi_norm(b));
      auto f = [&](double g, double one_minus, double one_plus) {
        const double den = jacobi(m, -alpha - 1.0, beta - 1.0, g);
        const double w = std::pow(one_minus, alpha) * std::pow(one_plus, beta) / (den * den);
        return w * xjacobi_eval(a, g).value * xjacobi_eval(b, g).value;
      };
      const double value = integrate_jacobi(f);
      const std::string id = prefix + "/n=" + std::to_string(n) + "," + std::to_string(k);
      if (n == k) {
        out.checks.push_back(make_check(id, xjacobi_norm(a), value, 1e-7, Criterion::relative));
      } else {
        out.checks.push_back(make_check(id, 0.0, std::abs(value) / scale, 1e-8));
      }
    }
  }
}

template <class Spec, class Residual>
void ode_checks(const std::string& prefix, const Spec& spec, double lo, double hi, Residual&& residual,
                VerificationReport& out) {
  double worst = 0.0;
  double control = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double g = lo + (hi - lo) * (k + 1) / 51.0;
    worst = nan_max(worst, std::abs(residual(spec, g, 0.0).scaled()));
    control = nan_max(control, std::abs(residual(spec, g, 1.0).scaled()));
  }
  out.checks.push_back(make_check(prefix + "/residual", 0.0, worst, 1e-8));
  out.checks.push_back(make_check(prefix + "/perturbed-control", 0.0, control, 1e-3, Criterion::exceeds));
}

// ------------------------------------------------------------ spectra

double energy(const OscillatorModel& M, int n) { return oscillator_energy(M, n); }
double energy(const GptModel& M, int n) { return gpt_energy(M, n); }
double bare_chi(const OscillatorModel& M, int n, double r) { return oscillator_chi(M, n, r); }
double bare_chi(const GptModel& M, int n, double r) { return gpt_chi(M, n, r); }
int level_count(const OscillatorModel&) { return kMaxLevels; }
int level_count(const GptModel& M) { return std::min(kMaxLevels, M.params().n_max + 1); }
void check_grid(const OscillatorModel&, const RadialGrid&) {}
void check_grid(const GptModel& M, const RadialGrid& grid) { check_pole_free(M, grid); }

void normalization_check(const OscillatorModel& M, int n, const std::string& prefix, VerificationReport& out) {
  const double ratio = oscillator_norm_constant(M, n) / chi_numeric_norm_constant(M, n);
  out.checks.push_back(make_check(prefix + "/norm" + n_label(n), 1.0, ratio * ratio, kNormTol));
}
void normalization_check(const GptModel&, int, const std::string&, VerificationReport&) {}

template <class Model>
void spectrum_checks(const Model& M, const RadialGrid& grid, VerificationReport& out) {
  check_grid(M, grid);
  const int k = level_count(M);
  const auto result = solve_lowest(solver_potential(M), grid, k);
  const std::string prefix = "isospectrality/" + label(M);
  for (int n = 0; n < k; ++n) {
    out.checks.push_back(make_check(prefix + "/E" + n_label(n), energy(M, n), result.eigenvalues[n], kSpectrumTol));
    const double overlap = eigenfunction_overlap(result, [&](double r) { return bare_chi(M, n, r); }, n);
    out.checks.push_back(make_check(prefix + "/overlap" + n_label(n), 1.0, overlap, kOverlapTol));
    const int nodes = count_sign_changes(result.eigenvectors[n]);
    out.checks.push_back(make_check(prefix + "/nodes" + n_label(n), n, nodes, 0.0));
    normalization_check(M, n, prefix, out);
  }
}

// The top GPT level decays like e^{-(A'-n_max) r} and can be cut off by the
// default r_max = 25. Stretch the grid for it at the default spacing.
RadialGrid spectrum_grid(const GptModel& M) {
  const auto base = default_grid(M);
  const double kappa = M.params().Ap - M.params().n_max;
  const double r_max = std::clamp(14.0 / kappa, base.r_max(), 200.0);
  const auto points = static_cast<std::size_t>(std::ceil(static_cast<double>(base.size()) * r_max / base.r_max()));
  return {base.r_min(), r_max, points};
}

RadialGrid model_grid(const OscillatorModel&, const ModelConfig& c) { return make_grid(c); }

RadialGrid model_grid(const GptModel& M, const ModelConfig& c) {
  if (c.r_max || c.points) return make_grid(c);
  const auto stretched = spectrum_grid(M);
  return {c.r_min.value_or(stretched.r_min()), stretched.r_max(), stretched.size()};
}

// ------------------------------------------------------------ shape invariance

void shape_checks(const OscillatorModel& M, VerificationReport& out) {
  const auto rep = shape_invariance_check(M, shape_invariance_grid(), kShapeTol);
  const std::string prefix = "shape-invariance/" + label(M);
  out.checks.push_back(make_check(prefix + "/constancy", 0.0, rep.max_deviation / std::abs(rep.mean_R), kShapeTol));
  out.checks.push_back(make_check(prefix + "/mean-R", 2.0 * M.omega(), rep.mean_R, kShapeTol));
}

void shape_checks(const GptModel& M, VerificationReport& out) {
  const auto rep = shape_invariance_check(M, shape_invariance_grid(), kShapeTol);
  const std::string prefix = "shape-invariance/" + label(M);
  out.checks.push_back(make_check(prefix + "/constancy", 0.0, rep.max_deviation / std::abs(rep.mean_R), kShapeTol));
  if (M.m() == 1) {
    out.checks.push_back(make_check(prefix + "/mean-R", 2.0 * M.params().Ap - 1.0, rep.mean_R, kShapeTol));
  }
}

void exact_gpt_check(double A, double B, int D, int m, VerificationReport& out) {
  const auto rep = exact_gpt_shape_invariance(A, B, D, m, kExactGptThreshold);
  const std::string params = "/A=" + num(A) + "/B=" + num(B) + "/D=" + std::to_string(D) + "/m=" + std::to_string(m);
  if (D == 3) {
    out.checks.push_back(make_check("shape-invariance/gpt-exact/positive-control" + params, 0.0, rep.max_deviation,
                                    kExactGptThreshold));
  } else {
    out.checks.push_back(make_check("shape-invariance/gpt-exact/negative-control" + params, 0.0, rep.max_deviation,
                                    kExactGptThreshold, Criterion::exceeds));
  }
}

template <class Model>
void pairing_checks(const Model& M, VerificationReport& out) {
  const auto grid = default_grid(M);
  check_grid(M, grid);
  const int k = level_count(M) - 1;
  if (k < 1) return;
  const auto [minus, plus] = partner_functions(M);
  const auto lower = solve_lowest(minus, grid, k + 1);
  const auto upper = solve_lowest(plus, grid, k);
  const std::string prefix = "shape-invariance/susy-pairing/" + label(M);
  for (int n = 0; n < k; ++n) {
    out.checks.push_back(
        make_check(prefix + n_label(n), lower.eigenvalues[n + 1], upper.eigenvalues[n], kSpectrumTol));
  }
}

// ------------------------------------------------------------ closed forms

RadialGrid closed_form_grid() { return {0.05, 8.0, 200}; }

template <class Model, class General, class Closed>
void closed_form_check(const Model& M, General&& general, Closed&& closed, VerificationReport& out) {
  const auto grid = closed_form_grid();
  check_grid(M, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.node(i);
    const double a = closed(M, r);
    const double b = general(M, r);
    worst = nan_max(worst, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
  }
  out.checks.push_back(make_check("closed-forms/" + label(M), 0.0, worst, kClosedFormTol));
}

void closed_form_check(const OscillatorModel& M, VerificationReport& out) {
  closed_form_check(
      M, [](const OscillatorModel& x, double r) { return oscillator_potential(x, r); },
      [](const OscillatorModel& x, double r) { return oscillator_potential_closed_form(x, r); }, out);
}

void closed_form_check(const GptModel& M, VerificationReport& out) {
  closed_form_check(
      M, [](const GptModel& x, double r) { return gpt_potential(x, r); },
      [](const GptModel& x, double r) { return gpt_potential_closed_form(x, r); }, out);
}

// ------------------------------------------------------------ driver

template <class F>
VerificationReport timed(const std::string& suite, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report{suite, {}, 0.0};
  body(report);
  report.sort();
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

template <class F>
void for_model(const ModelConfig& config, F&& f) {
  if (config.family == Family::oscillator) {
    f(make_oscillator(config));
  } else {
    f(make_gpt(config));
  }
}

}  // namespace

OscillatorModel make_oscillator(const ModelConfig& c) { return {c.omega, c.D, c.l, c.m}; }

GptModel make_gpt(const ModelConfig& c) { return {c.A, c.B, c.D, c.l, c.m}; }

RadialGrid make_grid(const ModelConfig& c) {
  const RadialGrid base = c.family == Family::oscillator ? default_grid(make_oscillator(c)) : default_grid(make_gpt(c));
  return {c.r_min.value_or(base.r_min()), c.r_max.value_or(base.r_max()), c.points.value_or(base.size())};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"orthogonality", "isospectrality", "shape-invariance", "closed-forms",
                                              "all"};
  return names;
}

VerificationReport verify_orthogonality() {
  return timed("orthogonality", [](VerificationReport& out) {
    for (int m = 1; m <= 3; ++m) {
      for (double alpha : {0.5, 1.5, 3.0}) {
        xlaguerre_gram(m, alpha, out);
        for (int n : {m, m + 2, m + 5}) {
          ode_checks("orthogonality/ode/xlaguerre/m=" + std::to_string(m) + "/alpha=" + num(alpha) + n_label(n),
                     XLaguerreSpec(m, n, alpha), 0.0, 20.0,
                     [](const XLaguerreSpec& s, double g, double off) { return xlaguerre_ode_residual(s, g, off); },
                     out);
        }
      }
    }
    struct Triple {
      int m;
      double alpha;
      double beta;
    };
    for (const auto& t : {Triple{1, 2.5, 0.5}, Triple{1, 0.5, 1.5}, Triple{2, 3.2, 0.7}, Triple{2, 0.5, -0.3},
                          Triple{3, 4.5, 1.2}}) {
      xjacobi_gram(t.m, t.alpha, t.beta, out);
      for (int n : {t.m, t.m + 2, t.m + 5}) {
        ode_checks("orthogonality/ode/xjacobi/m=" + std::to_string(t.m) + "/alpha=" + num(t.alpha) +
                       "/beta=" + num(t.beta) + n_label(n),
                   XJacobiSpec(t.m, n, t.alpha, t.beta), -1.0, 1.0,
                   [](const XJacobiSpec& s, double g, double off) { return xjacobi_ode_residual(s, g, off); }, out);
      }
    }
  });
}

VerificationReport verify_isospectrality(const SuiteOptions& options) {
  return timed("isospectrality", [&](VerificationReport& out) {
    if (options.model) {
      for_model(*options.model, [&](const auto& M) { spectrum_checks(M, model_grid(M, *options.model), out); });
      return;
    }
    for (double omega : {0.5, 1.0}) {
      for (int m = 0; m <= 2; ++m) {
        for (int D = 2; D <= 5; ++D) {
          for (int l = 0; l <= 2; ++l) {
            if (D == 2 && l == 0) continue;
            const OscillatorModel M(omega, D, l, m);
            spectrum_checks(M, default_grid(M), out);
          }
        }
      }
    }
    for (auto [A, B] : {std::pair{2.5, 5.0}, std::pair{1.5, 4.0}}) {
      for (int D = 3; D <= 4; ++D) {
        for (int l = 0; l <= 1; ++l) {
          for (int m = 0; m <= 2; ++m) {
            const GptModel M(A, B, D, l, m);
            spectrum_checks(M, spectrum_grid(M), out);
          }
        }
      }
    }
  });
}

VerificationReport verify_shape_invariance(const SuiteOptions& options) {
  return timed("shape-invariance", [&](VerificationReport& out) {
    if (options.exact_gpt) {
      ModelConfig fallback;
      fallback.family = Family::gpt;
      fallback.D = 4;
      const ModelConfig c = options.model.value_or(fallback);
      exact_gpt_check(c.A, c.B, c.D, c.m, out);
      return;
    }
    if (options.model) {
      for_model(*options.model, [&](const auto& M) {
        shape_checks(M, out);
        pairing_checks(M, out);
      });
      return;
    }
    for (double omega : {0.5, 1.0}) {
      for (int m = 0; m <= 2; ++m) {
        for (int D = 2; D <= 4; ++D) shape_checks(OscillatorModel(omega, D, D == 2 ? 1 : 0, m), out);
      }
    }
    for (int D = 3; D <= 4; ++D) {
      for (int l = 0; l <= 1; ++l) {
        for (int m = 0; m <= 2; ++m) shape_checks(GptModel(2.5, 5.0, D, l, m), out);
      }
    }
    exact_gpt_check(2.5, 5.0, 4, 1, out);
    exact_gpt_check(2.5, 5.0, 3, 1, out);
    pairing_checks(OscillatorModel(1.0, 3, 0, 1), out);
    pairing_checks(GptModel(2.5, 5.0, 3, 0, 1), out);
  });
}

VerificationReport verify_closed_forms(const SuiteOptions& options) {
  return timed("closed-forms", [&](VerificationReport& out) {
    if (options.model) {
      for_model(*options.model, [&](const auto& M) { closed_form_check(M, out); });
      return;
    }
    for (int m = 0; m <= 2; ++m) {
      closed_form_check(OscillatorModel(1.0, 3, 0, m), out);
      closed_form_check(OscillatorModel(0.5, 4, 1, m), out);
      closed_form_check(OscillatorModel(2.0, 2, 1, m), out);
      closed_form_check(GptModel(2.5, 5.0, 3, 0, m), out);
      closed_form_check(GptModel(1.5, 4.0, 3, 0, m), out);
      closed_form_check(GptModel(2.5, 5.0, 4, 1, m), out);
    }
  });
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "orthogonality") return verify_orthogonality();
  if (name == "isospectrality") return verify_isospectrality(options);
  if (name == "shape-invariance") return verify_shape_invariance(options);
  if (name == "closed-forms") return verify_closed_forms(options);
  if (name == "all") {
    VerificationReport all{"all", {}, 0.0};
    all.append(verify_orthogonality());
    all.append(verify_isospectrality(options));
    all.append(verify_shape_invariance(options));
    all.append(verify_closed_forms(options));
    all.sort();
    return all;
  }
  throw ParameterError("unknown suite '" + name + "'");
}

}  // namespace xeop
