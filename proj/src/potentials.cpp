// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include "xeop/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "xeop/error.hpp"
#include "xeop/orthopoly.hpp"
#include "xeop/quadrature.hpp"
#include "xeop/xpoly.hpp"

namespace xeop {

namespace {

double square(double x) { return x * x; }

// Integral of f^2 over (0, inf) with a tail cutoff relative to the bulk.
template <class F>
double squared_norm(F&& chi) {
  auto f = [&](double r) { return square(chi(r)); };
  const double bulk = integrate(f, 0.0, 40.0, {.panels = 16, .grading = Grading::left});
  return integrate_semi_infinite(f, 1e-15 * std::abs(bulk));
}

// ---------------------------------------------------------------- GPT core

struct JacobiRatio {
  double den;
  double rho;
};

JacobiRatio gpt_ratio(const GptParameters& p, int m, double x) {
  const double den = jacobi(m, -p.alpha - 1.0, p.beta - 1.0, x);
  return {den, jacobi(m - 1, -p.alpha, p.beta, x) / den};
}

double gpt_plain(double Ap, double Bp, double r) {
  const double s = std::sinh(r);
  return ((Bp * Bp + Ap * (Ap + 1.0)) - Bp * (2.0 * Ap + 1.0) * std::cosh(r)) / (s * s);
}

double gpt_general(const GptParameters& p, int m, double r) {
  const double Ap = p.Ap;
  const double Bp = p.Bp;
  double v = gpt_plain(Ap, Bp, r);
  if (m == 0) return v;
  const double x = std::cosh(r);
  const auto [den, rho] = gpt_ratio(p, m, x);
  if (den == 0.0 || !std::isfinite(rho)) throw PoleError("GPT: Jacobi denominator vanishes", r);
  const double k = 2.0 * Bp - m + 1.0;
  v += 2.0 * m * k - k * (2.0 * Ap + 1.0 - (2.0 * Bp + 1.0) * x) * rho +
       0.5 * k * k * square(std::sinh(r)) * rho * rho;
  return v;
}

double gpt_prefactor(const GptParameters& p, double r) {
  const double cosh_minus_one = 2.0 * square(std::sinh(0.5 * r));
  return std::exp(0.5 * (p.Bp - p.Ap) * std::log(cosh_minus_one) -
                  0.5 * (p.Bp + p.Ap) * std::log(std::cosh(r) + 1.0));
}

double gpt_bare_chi(const GptModel& model, int n, double r) {
  const auto& p = model.params();
  const int m = model.m();
  const double x = std::cosh(r);
  const double den = jacobi(m, -p.alpha - 1.0, p.beta - 1.0, x);
  if (den == 0.0) throw PoleError("GPT chi: Jacobi denominator vanishes", r);
  const double poly = m == 0 ? jacobi(n, p.alpha, p.beta, x)
                             : xjacobi_eval_unchecked(m, n + m, p.alpha, p.beta, x).value;
  return gpt_prefactor(p, r) / den * poly;
}

void check_gpt_index(const GptModel& model, int n) {
  if (n < 0 || n > model.params().n_max) {
    throw IndexError("GPT: n = " + std::to_string(n) + " is not a bound state (n_max = " +
                     std::to_string(model.params().n_max) + ")");
  }
}

void check_pole_distance(const GptModel& model, double r) {
  for (double pole : model.poles()) {
    if (std::abs(r - pole) <= 1e-12 * std::max(1.0, pole)) {
      throw PoleError("GPT: Jacobi denominator vanishes", pole);
    }
  }
}

}  // namespace

// --------------------------------------------------------------- oscillator

OscillatorModel::OscillatorModel(double omega, int D, int l, int m)
    : omega_(omega), D_(D), l_(l), m_(m), alpha_(l + 0.5 * (D - 2)) {
  if (!(omega > 0.0)) throw ParameterError("oscillator: omega must be > 0");
  if (D < 2) throw ParameterError("oscillator: D must be >= 2");
  if (l < 0) throw ParameterError("oscillator: l must be >= 0");
  if (m < 0) throw ParameterError("oscillator: m must be >= 0");
  if (!(alpha_ > 0.0)) throw ParameterError("oscillator: alpha = l + (D-2)/2 must be > 0 (D = 2 needs l >= 1)");
}

double oscillator_energy(const OscillatorModel& model, int n) {
  if (n < 0) throw IndexError("oscillator: n must be >= 0");
  return 2.0 * n * model.omega();
}

double oscillator_potential(const OscillatorModel& model, double r) {
  if (!(r > 0.0)) throw DomainError("oscillator potential: r must be > 0");
  const double w = model.omega();
  const double a = model.alpha();
  const int m = model.m();
  const int l = model.l();
  const int D = model.D();
  const double r2 = r * r;
  const double g = 0.5 * w * r2;
  const double plain = 0.25 * w * w * r2 + l * (l + D - 2.0) / r2 - w * (a + 1.0);
  if (m == 0) return plain;
  const double den = laguerre(m, a - 1.0, -g);
  if (den == 0.0) throw PoleError("oscillator: Laguerre denominator vanishes", r);
  const double ratio2 = laguerre(m - 2, a + 1.0, -g) / den;
  const double ratio1 = laguerre(m - 1, a, -g) / den;
  return plain - w * w * r2 * ratio2 + w * (w * r2 + 2.0 * a - 2.0) * ratio1 +
         2.0 * w * w * r2 * ratio1 * ratio1 - 2.0 * m * w;
}

double oscillator_potential_closed_form(const OscillatorModel& model, double r) {
  if (!(r > 0.0)) throw DomainError("oscillator potential: r must be > 0");
  const double w = model.omega();
  const int l = model.l();
  const int D = model.D();
  const double r2 = r * r;
  const double plain = 0.25 * w * w * r2 + l * (l + D - 2.0) / r2 - w * (l + 0.5 * D);
  switch (model.m()) {
    case 0:
      return plain;
    case 1: {
      const double c = 2.0 * l + D - 2.0;
      const double q = w * r2 + c;
      return plain + 4.0 * w / q - 8.0 * w * c / (q * q);
    }
    case 2: {
      const double k = 2.0 * l + D;
      const double q = w * w * r2 * r2 + 2.0 * w * r2 * k + (k - 2.0) * k;
      return plain + 8.0 * w * (w * r2 - k) / q + 64.0 * w * w * r2 * k / (q * q);
    }
    default:
      throw ParameterError("oscillator closed form: only m = 0, 1, 2");
  }
}

double oscillator_solver_potential(const OscillatorModel& model, double r) {
  return oscillator_potential(model, r) + centrifugal_solver_term(model.D(), model.l(), r);
}

double oscillator_reference_norm_constant(const OscillatorModel& model, int n) {
  const double a = model.alpha();
  return std::sqrt(gamma_product({n + 1.0}, {a + n}) / (a + n + model.m()));
}

double oscillator_norm_constant(const OscillatorModel& model, int n) {
  const double w = model.omega();
  return oscillator_reference_norm_constant(model, n) * std::sqrt(w * std::pow(0.5 * w, model.alpha()));
}

double oscillator_chi(const OscillatorModel& model, int n, double r, Normalization norm) {
  if (n < 0) throw IndexError("oscillator chi: n must be >= 0");
  if (r < 0.0) throw DomainError("oscillator chi: r must be >= 0");
  const double w = model.omega();
  const double a = model.alpha();
  const int m = model.m();
  const double g = 0.5 * w * r * r;
  const double den = laguerre(m, a - 1.0, -g);
  const double poly = xlaguerre_eval(XLaguerreSpec(m, n + m, a), g).value;
  const double bare = std::pow(r, a + 0.5) * std::exp(-0.25 * w * r * r) / den * poly;
  switch (norm) {
    case Normalization::none:
      return bare;
    case Normalization::analytic:
      return oscillator_norm_constant(model, n) * bare;
    case Normalization::numeric:
      return chi_numeric_norm_constant(model, n) * bare;
  }
  return bare;
}

RadialGrid default_grid(const OscillatorModel& model) {
  return {1e-4, std::max(20.0, 8.0 / std::sqrt(model.omega())), default_grid_points()};
}

// ---------------------------------------------------------------------- GPT

GptParameters gpt_derived_params(double A, double B, int D, int l) {
  GptParameters p;
  p.zeta = B * B + A * (A + 1.0) + l * (l + D - 2.0) + 0.25 * (D - 1.0) * (D - 3.0);
  const double z = p.zeta + 0.25;
  const double coupling = B * (2.0 * A + 1.0);
  const double inner = (z + coupling) * (z - coupling);
  if (inner < 0.0) throw ParameterError("GPT: (zeta+1/4)^2 < (B(2A+1))^2, B' is not real");
  const double bp2 = 0.5 * (z + std::sqrt(inner));
  if (!(bp2 > 0.0)) throw ParameterError("GPT: B' vanishes");
  p.Bp = std::sqrt(bp2);
  p.Ap = 0.5 * (coupling / p.Bp - 1.0);
  p.alpha = p.Bp - p.Ap - 0.5;
  p.beta = -p.Bp - p.Ap - 0.5;
  p.n_max = static_cast<int>(std::ceil(p.Ap)) - 1;
  return p;
}

GptModel::GptModel(double A, double B, int D, int l, int m, const GptParameters& p)
    : A_(A), B_(B), D_(D), l_(l), m_(m), p_(p) {
  if (m < 0) throw ParameterError("GPT: m must be >= 0");
  if (!(p_.Ap >= 1.0)) throw ParameterError("GPT: A' < 1, no bound state");
  locate_poles();
}

GptModel::GptModel(double A, double B, int D, int l, int m)
    : A_(A), B_(B), D_(D), l_(l), m_(m) {
  if (D < 2) throw ParameterError("GPT: D must be >= 2");
  if (l < 0) throw ParameterError("GPT: l must be >= 0");
  if (m < 0) throw ParameterError("GPT: m must be >= 0");
  const double half = 0.5 * (D - 1.0);
  if (!(A > 0.0)) throw ParameterError("GPT: require A + (D-1)/2 > (D-1)/2, i.e. A > 0");
  if (!(B > A + half)) throw ParameterError("GPT: require B > A + (D-1)/2");
  p_ = gpt_derived_params(A, B, D, l);
  if (!(p_.Ap >= 1.0)) throw ParameterError("GPT: A' < 1, no bound state");
  locate_poles();
}

GptModel GptModel::from_modified(double Ap, double Bp, int m) {
  if (!(Bp > Ap)) throw ParameterError("GPT: require B' > A'");
  GptParameters p;
  p.Ap = Ap;
  p.Bp = Bp;
  p.zeta = Bp * Bp + Ap * (Ap + 1.0);
  p.alpha = Bp - Ap - 0.5;
  p.beta = -Bp - Ap - 0.5;
  p.n_max = static_cast<int>(std::ceil(Ap)) - 1;
  return GptModel(Ap, Bp, 3, 0, m, p);
}

void GptModel::locate_poles() {
  poles_.clear();
  if (m_ == 0) return;
  // Denominator as a polynomial in t = (cosh r - 1)/2 = sinh^2(r/2) > 0.
  const auto c = jacobi_shifted_coefficients(m_, -p_.alpha - 1.0, p_.beta - 1.0);
  int changes = 0;
  double last = 0.0;
  for (double v : c) {
    if (v == 0.0) continue;
    if (last != 0.0 && (v > 0.0) != (last > 0.0)) ++changes;
    last = v;
  }
  if (changes == 0) return;  // Descartes: no positive root.

  double bound = 1.0;
  for (int k = 0; k < m_; ++k) bound = std::max(bound, 1.0 + std::abs(c[k] / c[m_]));
  auto poly = [&](double t) {
    double acc = 0.0;
    for (int k = m_; k >= 0; --k) acc = acc * t + c[k];
    return acc;
  };
  constexpr int kScan = 20000;
  const double t0 = 1e-14 * bound;
  const double ratio = std::pow(bound / t0, 1.0 / kScan);
  double t_prev = t0;
  double f_prev = poly(t_prev);
  for (int i = 1; i <= kScan; ++i) {
    const double t = t0 * std::pow(ratio, i);
    const double f = poly(t);
    if ((f > 0.0) != (f_prev > 0.0) || f == 0.0) {
      double lo = t_prev;
      double hi = t;
      for (int it = 0; it < 200 && hi - lo > 4e-16 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((poly(mid) > 0.0) == (f_prev > 0.0)) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      poles_.push_back(2.0 * std::asinh(std::sqrt(0.5 * (lo + hi))));
    }
    t_prev = t;
    f_prev = f;
  }
}

double gpt_energy(const GptModel& model, int n) {
  check_gpt_index(model, n);
  return -square(model.params().Ap - n);
}

double gpt_potential(const GptModel& model, double r) {
  if (!(r > 0.0)) throw DomainError("GPT potential: r must be > 0");
  check_pole_distance(model, r);
  return gpt_general(model.params(), model.m(), r);
}

double gpt_potential_closed_form(const GptModel& model, double r) {
  if (!(r > 0.0)) throw DomainError("GPT potential: r must be > 0");
  const double Ap = model.params().Ap;
  const double Bp = model.params().Bp;
  const double x = std::cosh(r);
  const double plain = gpt_plain(Ap, Bp, r);
  switch (model.m()) {
    case 0:
      return plain;
    case 1: {
      const double q = 2.0 * Bp * x - 2.0 * Ap - 1.0;
      return plain + 2.0 * (2.0 * Ap + 1.0) / q - 2.0 * (4.0 * Bp * Bp - square(2.0 * Ap + 1.0)) / (q * q);
    }
    case 2: {
      const double b1 = 2.0 * Bp - 1.0;
      const double q = b1 * (2.0 * Bp - 2.0) * x * x - 2.0 * b1 * (2.0 * Ap + 1.0) * x +
                       4.0 * Ap * (Ap + 1.0) + 2.0 * Bp - 1.0;
      return plain - 4.0 * (3.0 * b1 * (2.0 * Ap + 1.0) * x - 2.0 * Bp * b1 - 8.0 * Ap * (Ap + 1.0)) / q +
             8.0 * b1 * b1 * square(std::sinh(r)) * square((2.0 * Ap + 1.0) - (2.0 * Bp - 2.0) * x) / (q * q) -
             8.0;
    }
    default:
      throw ParameterError("GPT closed form: only m = 0, 1, 2");
  }
}

double gpt_exact_potential(double A, double B, int D, int m, double r) {
  if (!(r > 0.0)) throw DomainError("GPT potential: r must be > 0");
  const auto bare = GptModel::from_modified(A, B, m);
  return gpt_potential(bare, r) + centrifugal_solver_term(D, 0, r, Family::oscillator);
}

double gpt_chi(const GptModel& model, int n, double r, Normalization norm) {
  check_gpt_index(model, n);
  if (r < 0.0) throw DomainError("GPT chi: r must be >= 0");
  check_pole_distance(model, r);
  switch (norm) {
    case Normalization::none:
      return gpt_bare_chi(model, n, r);
    case Normalization::numeric:
      return chi_numeric_norm_constant(model, n) * gpt_bare_chi(model, n, r);
    case Normalization::analytic:
      throw ParameterError("GPT chi: no closed-form normalization in r; use numeric");
  }
  return gpt_bare_chi(model, n, r);
}

double gpt_reference_norm_constant(const GptModel& model, int n) {
  check_gpt_index(model, n);
  const double a = model.params().alpha;
  const double b = model.params().beta;
  const int m = model.m();
  const double rational = square(a + n + 1.0) * (a + b + 2.0 * n + 1.0) /
                          (std::pow(2.0, a + b + 1.0) * (1.0 + a + n - m) * (b + n + m));
  try {
    const double value = rational * gamma_product({n + 1.0, a + b + n + 1.0}, {a + n + 2.0, b + n});
    return value >= 0.0 ? std::sqrt(value) : std::numeric_limits<double>::quiet_NaN();
  } catch (const ParameterError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

RadialGrid default_grid(const GptModel&) { return {1e-4, 25.0, default_grid_points()}; }

void check_pole_free(const GptModel& model, const RadialGrid& grid) {
  for (double pole : model.poles()) {
    if (pole >= grid.r_min() && pole <= grid.r_max()) {
      throw PoleError("GPT: Jacobi denominator vanishes inside the grid", pole);
    }
  }
}

// ------------------------------------------------------------------- shared

double centrifugal_solver_term(int D, int /*l*/, double r, Family family) {
  if (!(r > 0.0)) throw DomainError("centrifugal term: r must be > 0");
  if (family == Family::gpt) return 0.0;
  return 0.25 * (D - 1.0) * (D - 3.0) / (r * r);
}

double chi_numeric_norm_constant(const OscillatorModel& model, int n) {
  return 1.0 / std::sqrt(squared_norm([&](double r) { return oscillator_chi(model, n, r); }));
}

double chi_numeric_norm_constant(const GptModel& model, int n) {
  check_gpt_index(model, n);
  return 1.0 / std::sqrt(squared_norm([&](double r) { return gpt_bare_chi(model, n, r); }));
}

RealFunction solver_potential(const OscillatorModel& model) {
  return [model](double r) { return oscillator_solver_potential(model, r); };
}

RealFunction solver_potential(const GptModel& model) {
  return [model](double r) { return gpt_potential(model, r); };
}

}  // namespace xeop
