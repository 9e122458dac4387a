// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef XEOP_VERIFY_HPP
#define XEOP_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xeop/grid.hpp"
#include "xeop/potentials.hpp"
#include "xeop/report.hpp"

namespace xeop {

/// One model plus grid overrides, as given on the command line.
struct ModelConfig {
  Family family = Family::oscillator;
  int m = 1;
  int D = 3;
  int l = 0;
  double omega = 1.0;
  double A = 2.5;
  double B = 5.0;
  std::optional<double> r_min;
  std::optional<double> r_max;
  std::optional<std::size_t> points;
};

OscillatorModel make_oscillator(const ModelConfig& config);
GptModel make_gpt(const ModelConfig& config);

/// The family default grid with any overrides applied.
RadialGrid make_grid(const ModelConfig& config);

struct SuiteOptions {
  /// When set, suites that work on models use this one instead of their
  /// built-in parameter matrix.
  std::optional<ModelConfig> model;
  /// Shape invariance of the unapproximated GPT potential for `model`
  /// (defaults: A = 2.5, B = 5, D = 4, m = 1).
  bool exact_gpt = false;
};

/// orthogonality, isospectrality, shape-invariance, closed-forms, all.
const std::vector<std::string>& suite_names();

/// Runs a named suite. Checks come back sorted by id. Throws ParameterError
/// for an unknown suite name.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

// Individual suites.

/// X_m Laguerre and X_m Jacobi Gram matrices against the closed-form norms,
/// and ODE residuals with perturbed-eigenvalue controls.
VerificationReport verify_orthogonality();

/// Finite-difference spectra against the analytic ones, plus eigenfunction
/// overlap, node count and (oscillator) analytic normalization.
VerificationReport verify_isospectrality(const SuiteOptions& options);

/// Shape invariance of both families, the exact-GPT controls and SUSY level
/// pairing.
VerificationReport verify_shape_invariance(const SuiteOptions& options);

/// General-m potentials against the m = 0, 1, 2 explicit forms.
VerificationReport verify_closed_forms(const SuiteOptions& options);

}  // namespace xeop

#endif  // XEOP_VERIFY_HPP
