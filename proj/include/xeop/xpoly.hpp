// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef XEOP_XPOLY_HPP
#define XEOP_XPOLY_HPP

#include <string>

#include "xeop/orthopoly.hpp"

namespace xeop {

/// Indices of an X_m Laguerre polynomial \hat L^{(alpha)}_{n,m}.
///
/// Invariants: m >= 0, n >= m, alpha > 0. Construction throws ParameterError
/// otherwise.
class XLaguerreSpec {
 public:
  XLaguerreSpec(int m, int n, double alpha);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  double alpha() const noexcept { return alpha_; }

 private:
  int m_;
  int n_;
  double alpha_;
};

/// Result of the admissibility test for X_m Jacobi parameters on [-1, 1].
struct Admissibility {
  bool ok = false;
  std::string diagnostic;  ///< names the first violated clause; empty when ok
};

/// Conditions under which the X_m Jacobi weight denominator has no zero on
/// [-1, 1]:
///   (i)  beta != 0, alpha and alpha-beta-m+1 not in {0, ..., m-1}
///   (ii) alpha > m-2 and sgn(alpha-m+1) = sgn(beta)
/// Integer membership is tested with tolerance 1e-9.
Admissibility xjacobi_admissible(int m, double alpha, double beta);

/// Indices of an X_m Jacobi polynomial \hat P^{(alpha,beta)}_{n,m} on [-1, 1].
///
/// Invariants: m >= 1, n >= m, alpha, beta > -1, alpha != beta and the
/// parameters are admissible.
class XJacobiSpec {
 public:
  XJacobiSpec(int m, int n, double alpha, double beta);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

 private:
  int m_;
  int n_;
  double alpha_;
  double beta_;
};

/// Residual of a second-order ODE at one point, with the scale
/// max(1, |value|, |d1|, |d2|) used to judge it.
struct OdeResidual {
  double residual = 0.0;
  double scale = 1.0;
  double scaled() const noexcept { return residual / scale; }
};

// ---------------------------------------------------------------- Laguerre

/// \hat L^{(a)}_{n,m}(g) = L^{(a)}_m(-g) L^{(a-1)}_{n-m}(g)
///                       + L^{(a-1)}_m(-g) L^{(a)}_{n-m-1}(g)
/// with derivatives by the product rule. For m = 0 this is L^{(a)}_n(g).
PolyValue xlaguerre_eval(const XLaguerreSpec& spec, double g);

/// W^a_m(g) = g^a e^{-g} / (L^{(a-1)}_m(-g))^2.
double xlaguerre_weight(int m, double alpha, double g);

/// Closed-form squared norm (a+n) Gamma(a+n-m) / (n-m)!.
double xlaguerre_norm(const XLaguerreSpec& spec);

/// Left-hand side of
///   y'' + [(a+1-g) - 2g rho]/g y' + [n - 2a rho]/g y = 0,
///   rho = L^{(a)}_{m-1}(-g) / L^{(a-1)}_m(-g),
/// evaluated on y = \hat L^{(a)}_{n,m}. The eigenvalue constant is n (the
/// full index, not n-m); `eigen_offset` is added to it for sensitivity
/// checks. Throws DomainError for g <= 0.
OdeResidual xlaguerre_ode_residual(const XLaguerreSpec& spec, double g, double eigen_offset = 0.0);

// ------------------------------------------------------------------ Jacobi

/// \hat P^{(a,b)}_{n,m}(g), j = n-m:
///   (-1)^m [ (1+a+b+j)/(2(1+a+j)) (g-1) P^{(-a-1,b-1)}_m P^{(a+2,b)}_{j-1}
///          + (1+a-m)/(a+1+j)        P^{(-2-a,b)}_m   P^{(a+1,b-1)}_j ].
PolyValue xjacobi_eval(const XJacobiSpec& spec, double g);

/// Same composition without the [-1, 1] admissibility contract. The GPT
/// family evaluates it at g = cosh r with beta < -1. Throws ParameterError if
/// a+1+j = 0.
PolyValue xjacobi_eval_unchecked(int m, int n, double alpha, double beta, double g);

/// (1-g)^a (1+g)^b / (P^{(-a-1,b-1)}_m(g))^2 on -1 < g < 1.
/// Throws ParameterError for inadmissible parameters, DomainError outside the
/// open interval and PoleError if the denominator magnitude is below 1e-12.
double xjacobi_weight(int m, double alpha, double beta, double g);

/// Closed-form squared norm on [-1, 1]:
///   2^{a+b+1} (1+a+n-2m)(b+n) Gamma(a+2+n-m) Gamma(b+n-m)
///   / [(n-m)! (a+1+n-m)^2 (a+b+2n-2m+1) Gamma(a+b+n-m+1)].
double xjacobi_norm(const XJacobiSpec& spec);

/// Left-hand side of the X_m Jacobi equation
///   y'' + [(a-b-m+1) rho - (a+1)/(1-g) + (b+1)/(1+g)] y'
///       + [b(a-b-m+1)(1-g) rho + m(a-b-m+1) + (n-m)(a+b+n-m+1)] / (1-g^2) y = 0,
///   rho = P^{(-a,b)}_{m-1}(g) / P^{(-a-1,b-1)}_m(g).
/// `eigen_offset` is added to the constant part of the last bracket.
/// Throws DomainError unless -1 < g < 1.
OdeResidual xjacobi_ode_residual(const XJacobiSpec& spec, double g, double eigen_offset = 0.0);

}  // namespace xeop

#endif  // XEOP_XPOLY_HPP
