// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include "xeop/orthopoly.hpp"

#include <cmath>

#include "xeop/error.hpp"

namespace xeop {

namespace {

constexpr double kDegenerate = 1e-12;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && std::abs(x - std::round(x)) < 1e-12;
}

double jacobi_series(int n, double alpha, double beta, double x) {
  const auto c = jacobi_shifted_coefficients(n, alpha, beta);
  const double t = 0.5 * (x - 1.0);
  double acc = 0.0;
  for (int k = n; k >= 0; --k) acc = acc * t + c[k];
  return acc;
}

}  // namespace

double laguerre(int n, double alpha, double x) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi(int n, double alpha, double beta, double x) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  const double ab = alpha + beta;
  double prev = 1.0;
  double cur = (alpha + 1.0) + 0.5 * (ab + 2.0) * (x - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + ab;
    const double a_k = 2.0 * k * (k + ab) * (s - 2.0);
    if (std::abs(k + ab) < kDegenerate || std::abs(s - 2.0) < kDegenerate) {
      return jacobi_series(n, alpha, beta, x);
    }
    const double b_k = (s - 1.0) * (s * (s - 2.0) * x + alpha * alpha - beta * beta);
    const double c_k = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
    const double next = (b_k * cur - c_k * prev) / a_k;
    prev = cur;
    cur = next;
  }
  return cur;
}

PolyValue laguerre_eval(const ClassicalLaguerreSpec& spec, double x) {
  const int n = spec.n;
  const double a = spec.alpha;
  return {laguerre(n, a, x), -laguerre(n - 1, a + 1.0, x), laguerre(n - 2, a + 2.0, x)};
}

PolyValue jacobi_eval(const ClassicalJacobiSpec& spec, double x) {
  const int n = spec.n;
  const double a = spec.alpha;
  const double b = spec.beta;
  const double s = n + a + b;
  return {jacobi(n, a, b, x), 0.5 * (s + 1.0) * jacobi(n - 1, a + 1.0, b + 1.0, x),
          0.25 * (s + 1.0) * (s + 2.0) * jacobi(n - 2, a + 2.0, b + 2.0, x)};
}

std::vector<double> jacobi_shifted_coefficients(int n, double alpha, double beta) {
  if (n < 0) return {};
  // c_k = (alpha+k+1)_{n-k} (alpha+beta+n+1)_k / ((n-k)! k!)
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    double v = 1.0;
    for (int i = 0; i < n - k; ++i) v *= (alpha + k + 1.0 + i) / (i + 1.0);
    for (int i = 0; i < k; ++i) v *= (alpha + beta + n + 1.0 + i) / (i + 1.0);
    c[static_cast<std::size_t>(k)] = v;
  }
  return c;
}

double gamma_product(std::initializer_list<double> numerator,
                     std::initializer_list<double> denominator) {
  double log_mag = 0.0;
  int sign = 1;
  auto accumulate = [&](double x, int power) {
    if (is_nonpositive_integer(x)) {
      throw ParameterError("Gamma argument is a non-positive integer: " + std::to_string(x));
    }
    log_mag += power * std::lgamma(x);
    if (x < 0.0 && static_cast<long>(std::ceil(-x)) % 2 != 0) sign = -sign;
  };
  for (double x : numerator) accumulate(x, 1);
  for (double x : denominator) accumulate(x, -1);
  return sign * std::exp(log_mag);
}

}  // namespace xeop
