// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef XEOP_ORTHOPOLY_HPP
#define XEOP_ORTHOPOLY_HPP

#include <initializer_list>
#include <vector>

namespace xeop {

/// Value of a polynomial together with its first two derivatives.
struct PolyValue {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Classical Laguerre L_n^{(alpha)}. Degree -1 is the zero polynomial.
struct ClassicalLaguerreSpec {
  int n = 0;
  double alpha = 0.0;
};

/// Classical Jacobi P_n^{(alpha,beta)}. Degree -1 is the zero polynomial.
struct ClassicalJacobiSpec {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// L_n^{(alpha)}(x) by the three-term recurrence; 0 for n < 0.
double laguerre(int n, double alpha, double x);

/// P_n^{(alpha,beta)}(x) by the three-term recurrence; 0 for n < 0.
///
/// Valid for any real x (the GPT family evaluates at cosh r >= 1) and for
/// arbitrary real parameters, including the negative ones that appear in the
/// X_m denominators. When the recurrence coefficients degenerate
/// (n + alpha + beta = 0 for some step) the explicit expansion in (x-1)/2 is
/// used instead.
double jacobi(int n, double alpha, double beta, double x);

/// Value, d/dx and d^2/dx^2, using d/dx L_n^{(a)} = -L_{n-1}^{(a+1)}.
PolyValue laguerre_eval(const ClassicalLaguerreSpec& spec, double x);

/// Value, d/dx and d^2/dx^2, using
/// d/dx P_n^{(a,b)} = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}.
PolyValue jacobi_eval(const ClassicalJacobiSpec& spec, double x);

/// Coefficients c_k of P_n^{(a,b)}(x) = sum_k c_k ((x-1)/2)^k, k = 0..n.
/// Used for sign analysis of denominators on [1, inf).
std::vector<double> jacobi_shifted_coefficients(int n, double alpha, double beta);

/// Product of Gamma values over a numerator and denominator list, via lgamma.
/// Throws ParameterError if any argument is a non-positive integer.
double gamma_product(std::initializer_list<double> numerator,
                     std::initializer_list<double> denominator);

}  // namespace xeop

#endif  // XEOP_ORTHOPOLY_HPP
