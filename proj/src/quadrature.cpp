// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include "xeop/quadrature.hpp"

#include <array>
#include <numbers>
#include <vector>

namespace xeop {

namespace {

constexpr int kMaxNodes = 64;

struct Table {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Newton iteration on P_n from the Chebyshev initial guess.
Table build_table(int n) {
  Table t{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    t.nodes[i] = -x;
    t.nodes[n - 1 - i] = x;
    t.weights[i] = w;
    t.weights[n - 1 - i] = w;
  }
  return t;
}

const std::array<Table, kMaxNodes + 1>& tables() {
  static const auto all = [] {
    std::array<Table, kMaxNodes + 1> a;
    for (int n = 1; n <= kMaxNodes; ++n) a[n] = build_table(n);
    return a;
  }();
  return all;
}

}  // namespace

GaussLegendreTable gauss_legendre(int n) {
  if (n < 1 || n > kMaxNodes) throw ParameterError("gauss_legendre: node count must be in [1, 64]");
  const auto& t = tables()[n];
  return {t.nodes, t.weights};
}

void detail::check_rule(const QuadratureRule& rule) {
  if (rule.panels < 1) throw ParameterError("quadrature: panels must be >= 1");
  if (rule.nodes_per_panel < 4 || rule.nodes_per_panel > kMaxNodes) {
    throw ParameterError("quadrature: nodes_per_panel must be in [4, 64]");
  }
  if (rule.grading != Grading::none &&
      (rule.grading_levels < 1 || !(rule.grading_ratio > 0.0 && rule.grading_ratio < 1.0))) {
    throw ParameterError("quadrature: invalid grading parameters");
  }
}

}  // namespace xeop
