// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include "xeop/xpoly.hpp"

#include <algorithm>
#include <cmath>

#include "xeop/error.hpp"

namespace xeop {

namespace {

constexpr double kMembershipTol = 1e-9;

bool in_low_integers(double x, int m) {
  for (int k = 0; k < m; ++k) {
    if (std::abs(x - k) < kMembershipTol) return true;
  }
  return false;
}

int signum(double x) { return (x > 0.0) - (x < 0.0); }

// Product of f(g) and h(g) with derivatives.
PolyValue product(const PolyValue& f, const PolyValue& h) {
  return {f.value * h.value, f.d1 * h.value + f.value * h.d1,
          f.d2 * h.value + 2.0 * f.d1 * h.d1 + f.value * h.d2};
}

// f(-g) as a function of g.
PolyValue reflected(const PolyValue& f_at_minus_g) {
  return {f_at_minus_g.value, -f_at_minus_g.d1, f_at_minus_g.d2};
}

double local_scale(const PolyValue& v) {
  return std::max({1.0, std::abs(v.value), std::abs(v.d1), std::abs(v.d2)});
}

}  // namespace

XLaguerreSpec::XLaguerreSpec(int m, int n, double alpha) : m_(m), n_(n), alpha_(alpha) {
  if (m < 0) throw ParameterError("X_m Laguerre: m must be >= 0");
  if (n < m) throw ParameterError("X_m Laguerre: n must be >= m");
  if (!(alpha > 0.0)) throw ParameterError("X_m Laguerre: alpha must be > 0");
}

Admissibility xjacobi_admissible(int m, double alpha, double beta) {
  if (std::abs(beta) < kMembershipTol) return {false, "beta must be nonzero"};
  if (in_low_integers(alpha, m)) return {false, "alpha must not lie in {0,...,m-1}"};
  if (in_low_integers(alpha - beta - m + 1.0, m)) {
    return {false, "alpha-beta-m+1 must not lie in {0,...,m-1}"};
  }
  if (!(alpha > m - 2.0)) return {false, "alpha > m-2 violated"};
  if (signum(alpha - m + 1.0) != signum(beta)) return {false, "sgn(alpha-m+1) = sgn(beta) violated"};
  return {true, {}};
}

XJacobiSpec::XJacobiSpec(int m, int n, double alpha, double beta)
    : m_(m), n_(n), alpha_(alpha), beta_(beta) {
  if (m < 1) throw ParameterError("X_m Jacobi: m must be >= 1");
  if (n < m) throw ParameterError("X_m Jacobi: n must be >= m");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw ParameterError("X_m Jacobi: alpha, beta must be > -1");
  if (std::abs(alpha - beta) < kMembershipTol) throw ParameterError("X_m Jacobi: alpha must differ from beta");
  const auto adm = xjacobi_admissible(m, alpha, beta);
  if (!adm.ok) throw ParameterError("X_m Jacobi: inadmissible parameters: " + adm.diagnostic);
}

// ---------------------------------------------------------------- Laguerre

PolyValue xlaguerre_eval(const XLaguerreSpec& spec, double g) {
  const int m = spec.m();
  const int j = spec.n() - m;
  const double a = spec.alpha();
  const auto first = product(reflected(laguerre_eval({m, a}, -g)), laguerre_eval({j, a - 1.0}, g));
  const auto second = product(reflected(laguerre_eval({m, a - 1.0}, -g)), laguerre_eval({j - 1, a}, g));
  return {first.value + second.value, first.d1 + second.d1, first.d2 + second.d2};
}

double xlaguerre_weight(int m, double alpha, double g) {
  if (g < 0.0) throw DomainError("X_m Laguerre weight: g must be >= 0");
  const double den = laguerre(m, alpha - 1.0, -g);
  if (std::abs(den) < 1e-300) throw PoleError("X_m Laguerre weight: degenerate denominator", g);
  if (g == 0.0) return 0.0;
  return std::exp(alpha * std::log(g) - g) / (den * den);
}

double xlaguerre_norm(const XLaguerreSpec& spec) {
  const double a = spec.alpha();
  const int j = spec.n() - spec.m();
  return (a + spec.n()) * gamma_product({a + j}, {j + 1.0});
}

OdeResidual xlaguerre_ode_residual(const XLaguerreSpec& spec, double g, double eigen_offset) {
  if (!(g > 0.0)) throw DomainError("X_m Laguerre ODE: g must be > 0");
  const int m = spec.m();
  const double a = spec.alpha();
  const auto y = xlaguerre_eval(spec, g);
  const double rho = laguerre(m - 1, a, -g) / laguerre(m, a - 1.0, -g);
  const double q = ((a + 1.0 - g) - 2.0 * g * rho) / g;
  const double r = (spec.n() + eigen_offset - 2.0 * a * rho) / g;
  return {y.d2 + q * y.d1 + r * y.value, local_scale(y)};
}

// ------------------------------------------------------------------ Jacobi

PolyValue xjacobi_eval_unchecked(int m, int n, double a, double b, double g) {
  const int j = n - m;
  if (j < 0) throw ParameterError("X_m Jacobi: n must be >= m");
  if (std::abs(a + 1.0 + j) < 1e-14) throw ParameterError("X_m Jacobi: alpha+1+j vanishes");
  const double c1 = (1.0 + a + b + j) / (2.0 * (1.0 + a + j));
  const double c2 = (1.0 + a - m) / (a + 1.0 + j);

  const PolyValue shift{g - 1.0, 1.0, 0.0};
  const auto t1 = product(product(shift, jacobi_eval({m, -a - 1.0, b - 1.0}, g)),
                          jacobi_eval({j - 1, a + 2.0, b}, g));
  const auto t2 = product(jacobi_eval({m, -2.0 - a, b}, g), jacobi_eval({j, a + 1.0, b - 1.0}, g));
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return {sign * (c1 * t1.value + c2 * t2.value), sign * (c1 * t1.d1 + c2 * t2.d1),
          sign * (c1 * t1.d2 + c2 * t2.d2)};
}

PolyValue xjacobi_eval(const XJacobiSpec& spec, double g) {
  return xjacobi_eval_unchecked(spec.m(), spec.n(), spec.alpha(), spec.beta(), g);
}

double xjacobi_weight(int m, double alpha, double beta, double g) {
  const auto adm = xjacobi_admissible(m, alpha, beta);
  if (!adm.ok) throw ParameterError("X_m Jacobi weight: " + adm.diagnostic);
  if (!(g > -1.0 && g < 1.0)) throw DomainError("X_m Jacobi weight: g must lie in (-1, 1)");
  const double den = jacobi(m, -alpha - 1.0, beta - 1.0, g);
  if (std::abs(den) < 1e-12) throw PoleError("X_m Jacobi weight: denominator vanishes", g);
  return std::pow(1.0 - g, alpha) * std::pow(1.0 + g, beta) / (den * den);
}

double xjacobi_norm(const XJacobiSpec& spec) {
  const double a = spec.alpha();
  const double b = spec.beta();
  const int n = spec.n();
  const int m = spec.m();
  const int j = n - m;
  const double rational = std::pow(2.0, a + b + 1.0) * (1.0 + a + n - 2.0 * m) * (b + n) /
                          ((a + 1.0 + j) * (a + 1.0 + j) * (a + b + 2.0 * j + 1.0));
  return rational * gamma_product({a + 2.0 + j, b + j}, {j + 1.0, a + b + j + 1.0});
}

OdeResidual xjacobi_ode_residual(const XJacobiSpec& spec, double g, double eigen_offset) {
  if (!(g > -1.0 && g < 1.0)) throw DomainError("X_m Jacobi ODE: g must lie in (-1, 1)");
  const double a = spec.alpha();
  const double b = spec.beta();
  const int m = spec.m();
  const int j = spec.n() - m;
  const auto y = xjacobi_eval(spec, g);
  const double shift = a - b - m + 1.0;
  const double rho = jacobi(m - 1, -a, b, g) / jacobi(m, -a - 1.0, b - 1.0, g);
  const double q = shift * rho - (a + 1.0) / (1.0 - g) + (b + 1.0) / (1.0 + g);
  const double r = (b * shift * (1.0 - g) * rho + m * shift + j * (a + b + j + 1.0) + eigen_offset) /
                   (1.0 - g * g);
  return {y.d2 + q * y.d1 + r * y.value, local_scale(y)};
}

}  // namespace xeop
