// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef XEOP_QUADRATURE_HPP
#define XEOP_QUADRATURE_HPP

#include <cmath>
#include <span>

#include "xeop/error.hpp"

namespace xeop {

/// Which ends of [a, b] get geometric panel refinement.
enum class Grading { none, left, right, both };

/// Composite Gauss-Legendre rule.
///
/// `panels` equal panels of `nodes_per_panel` nodes each. With grading, the
/// outermost panel at a graded end is further split into `grading_levels`
/// geometric sub-panels (ratio `grading_ratio`) which resolves algebraic
/// endpoint singularities such as g^alpha or (1-g)^alpha.
struct QuadratureRule {
  int panels = 8;
  int nodes_per_panel = 32;
  Grading grading = Grading::none;
  int grading_levels = 24;
  double grading_ratio = 0.15;
};

/// Reference nodes and weights on [-1, 1]. Tables for 1..64 nodes are built
/// once and shared read-only.
struct GaussLegendreTable {
  std::span<const double> nodes;
  std::span<const double> weights;
};
GaussLegendreTable gauss_legendre(int n);

namespace detail {

void check_rule(const QuadratureRule& rule);

template <class F>
double gauss_panel(F&& f, double a, double b, const GaussLegendreTable& t) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const double x = mid + half * t.nodes[i];
    const double v = f(x);
    if (!std::isfinite(v)) throw NonFiniteError("quadrature: non-finite integrand sample", x);
    sum += t.weights[i] * v;
  }
  return half * sum;
}

// Panel [a, b] split geometrically toward a (toward_left) or toward b.
template <class F>
double graded_panel(F&& f, double a, double b, bool toward_left, const QuadratureRule& rule,
                    const GaussLegendreTable& t) {
  const double width = b - a;
  double sum = 0.0;
  double outer = 1.0;
  for (int level = 0; level < rule.grading_levels; ++level) {
    const double inner = outer * rule.grading_ratio;
    sum += toward_left ? gauss_panel(f, a + inner * width, a + outer * width, t)
                       : gauss_panel(f, b - outer * width, b - inner * width, t);
    outer = inner;
  }
  sum += toward_left ? gauss_panel(f, a, a + outer * width, t)
                     : gauss_panel(f, b - outer * width, b, t);
  return sum;
}

}  // namespace detail

/// Composite Gauss-Legendre estimate of the integral of f over [a, b].
/// Throws NonFiniteError if f is NaN or infinite at a node.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureRule& rule = {}) {
  detail::check_rule(rule);
  if (!(a < b)) throw DomainError("integrate: require a < b");
  const auto table = gauss_legendre(rule.nodes_per_panel);
  const double h = (b - a) / rule.panels;
  const bool grade_left = rule.grading == Grading::left || rule.grading == Grading::both;
  const bool grade_right = rule.grading == Grading::right || rule.grading == Grading::both;
  double sum = 0.0;
  for (int p = 0; p < rule.panels; ++p) {
    const double lo = a + p * h;
    const double hi = (p + 1 == rule.panels) ? b : a + (p + 1) * h;
    if (p == 0 && grade_left && rule.panels == 1 && grade_right) {
      const double mid = 0.5 * (lo + hi);
      sum += detail::graded_panel(f, lo, mid, true, rule, table);
      sum += detail::graded_panel(f, mid, hi, false, rule, table);
    } else if (p == 0 && grade_left) {
      sum += detail::graded_panel(f, lo, hi, true, rule, table);
    } else if (p + 1 == rule.panels && grade_right) {
      sum += detail::graded_panel(f, lo, hi, false, rule, table);
    } else {
      sum += detail::gauss_panel(f, lo, hi, table);
    }
  }
  return sum;
}

/// Integral of f over [0, inf) for integrands decaying at least like
/// e^{-g/2} poly(g). Integrates [0, 40] (graded at 0), then appends windows
/// [G, 2G] until a window contributes less than `cutoff_tol` in magnitude.
/// Throws ConvergenceError if G would exceed 10240.
template <class F>
double integrate_semi_infinite(F&& f, double cutoff_tol, int nodes_per_panel = 32) {
  QuadratureRule head{.panels = 16, .nodes_per_panel = nodes_per_panel, .grading = Grading::left};
  double total = integrate(f, 0.0, 40.0, head);
  const QuadratureRule tail{.panels = 16, .nodes_per_panel = nodes_per_panel};
  for (double G = 40.0;; G *= 2.0) {
    if (2.0 * G > 10240.0) throw ConvergenceError("integrate_semi_infinite: no convergence up to 10240");
    const double piece = integrate(f, G, 2.0 * G, tail);
    total += piece;
    if (std::abs(piece) < cutoff_tol) break;
  }
  return total;
}

}  // namespace xeop

#endif  // XEOP_QUADRATURE_HPP
