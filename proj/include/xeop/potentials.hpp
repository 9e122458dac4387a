// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef XEOP_POTENTIALS_HPP
#define XEOP_POTENTIALS_HPP

#include <vector>

#include "xeop/grid.hpp"

namespace xeop {

enum class Family { oscillator, gpt };

enum class Normalization {
  none,      ///< bare closed form, N = 1
  analytic,  ///< closed-form normalization constant (oscillator only)
  numeric,   ///< unit L^2 norm on (0, inf) by quadrature
};

// --------------------------------------------------------------- oscillator

/// Rationally extended radial oscillator in D dimensions (hbar = 2m = 1).
///
/// alpha = l + (D-2)/2 must be positive, so D = 2 requires l >= 1.
class OscillatorModel {
 public:
  OscillatorModel(double omega, int D, int l, int m);

  double omega() const noexcept { return omega_; }
  int D() const noexcept { return D_; }
  int l() const noexcept { return l_; }
  int m() const noexcept { return m_; }
  double alpha() const noexcept { return alpha_; }

  /// Same model with l -> l + 1 (alpha -> alpha + 1).
  OscillatorModel with_l(int l) const { return {omega_, D_, l, m_}; }

 private:
  double omega_;
  int D_;
  int l_;
  int m_;
  double alpha_;
};

/// E_n = 2 n omega, independent of m, D and l.
double oscillator_energy(const OscillatorModel& model, int n);

/// V_m(r) built from the general-m Laguerre-ratio formula. This is the
/// potential of the D-dimensional radial equation for psi; the chi equation
/// adds centrifugal_solver_term.
double oscillator_potential(const OscillatorModel& model, double r);

/// Explicit rational forms for m = 0, 1, 2. Independent route used to
/// cross-check oscillator_potential. Throws ParameterError for m > 2.
double oscillator_potential_closed_form(const OscillatorModel& model, double r);

/// V_m(r) + (D-1)(D-3)/(4 r^2): potential of -chi'' + V chi = E chi.
double oscillator_solver_potential(const OscillatorModel& model, double r);

/// chi_{n,m}(r) = N r^{alpha+1/2} e^{-omega r^2/4} / L^{(alpha-1)}_m(-g)
///                * \hat L^{(alpha)}_{n+m,m}(g),  g = omega r^2 / 2.
double oscillator_chi(const OscillatorModel& model, int n, double r,
                      Normalization norm = Normalization::none);

/// sqrt(n! / ((alpha+n+m) Gamma(alpha+n))): unit norm in the variable g.
double oscillator_reference_norm_constant(const OscillatorModel& model, int n);

/// Reference constant times the g -> r Jacobian sqrt(omega (omega/2)^alpha),
/// giving unit L^2 norm in r.
double oscillator_norm_constant(const OscillatorModel& model, int n);

/// Grid [1e-4, max(20, 8/sqrt(omega))] with default_grid_points() nodes.
RadialGrid default_grid(const OscillatorModel& model);

// ---------------------------------------------------------------------- GPT

/// Modified parameters of the l-approximated GPT family.
struct GptParameters {
  double zeta = 0.0;
  double Bp = 0.0;     ///< B'
  double Ap = 0.0;     ///< A'
  double alpha = 0.0;  ///< B' - A' - 1/2
  double beta = 0.0;   ///< -B' - A' - 1/2
  int n_max = 0;       ///< largest integer strictly below A'
};

/// zeta = B^2 + A(A+1) + l(l+D-2) + (D-1)(D-3)/4,
/// B'  = sqrt( ((zeta+1/4) + sqrt((zeta+1/4)^2 - (B(2A+1))^2)) / 2 ),
/// A'  = (B(2A+1)/B' - 1) / 2.
/// Throws ParameterError if the inner radicand is negative or B' = 0.
GptParameters gpt_derived_params(double A, double B, int D, int l);

/// Rationally extended generalized Poschl-Teller system. Arbitrary l enters
/// through 1/r^2 ~ 1/sinh^2 r, absorbed into (A', B').
///
/// Requires B > A + (D-1)/2 > (D-1)/2 and A' >= 1. Zeros of the denominator
/// P^{(-alpha-1,beta-1)}_m(cosh r) on r > 0 do not invalidate the model; they
/// are located at construction and reported by poles().
class GptModel {
 public:
  GptModel(double A, double B, int D, int l, int m);

  /// Model given directly by (A', B'); used for shape-invariance partners
  /// (A' -> A' - 1 at fixed B'). Requires B' > A' >= 1.
  static GptModel from_modified(double Ap, double Bp, int m);

  double A() const noexcept { return A_; }
  double B() const noexcept { return B_; }
  int D() const noexcept { return D_; }
  int l() const noexcept { return l_; }
  int m() const noexcept { return m_; }
  const GptParameters& params() const noexcept { return p_; }
  /// Radii r > 0 where the Jacobi denominator vanishes (ascending).
  const std::vector<double>& poles() const noexcept { return poles_; }

 private:
  GptModel(double A, double B, int D, int l, int m, const GptParameters& p);
  void locate_poles();

  double A_;
  double B_;
  int D_;
  int l_;
  int m_;
  GptParameters p_;
  std::vector<double> poles_;
};

/// E_n = -(A' - n)^2 for 0 <= n <= n_max; IndexError otherwise.
double gpt_energy(const GptModel& model, int n);

/// V_eff,m(r) = V_GPT^{(A',B')} + 2m(2B'-m+1)
///   - (2B'-m+1)[2A'+1-(2B'+1)cosh r] rho + (2B'-m+1)^2 sinh^2 r / 2 rho^2,
///   rho = P^{(-alpha,beta)}_{m-1}(cosh r) / P^{(-alpha-1,beta-1)}_m(cosh r).
/// This is already the chi-equation potential. Throws PoleError when r is a
/// pole of the model.
double gpt_potential(const GptModel& model, double r);

/// Explicit forms for m = 0, 1, 2. Throws ParameterError for m > 2.
double gpt_potential_closed_form(const GptModel& model, double r);

/// Exact (unapproximated) s-wave potential in D dimensions:
/// V_eff,m at the bare (A, B) plus (D-1)(D-3)/(4 r^2). Not shape invariant
/// unless D = 3.
double gpt_exact_potential(double A, double B, int D, int m, double r);

/// chi_{n,m}(r) = N (cosh r - 1)^{(B'-A')/2} (cosh r + 1)^{-(B'+A')/2}
///   / P^{(-alpha-1,beta-1)}_m(cosh r) * \hat P^{(alpha,beta)}_{n+m,m}(cosh r).
/// Only Normalization::none and ::numeric are supported.
double gpt_chi(const GptModel& model, int n, double r, Normalization norm = Normalization::none);

/// Normalization constant printed for the [-1,1] Jacobi weight. Diagnostic
/// only: it does not normalize chi in r. NaN when its radicand is negative.
double gpt_reference_norm_constant(const GptModel& model, int n);

/// Grid [1e-4, 25] with default_grid_points() nodes.
RadialGrid default_grid(const GptModel& model);

/// Throws PoleError if a pole of the model lies in [r_min, r_max] of the grid.
void check_pole_free(const GptModel& model, const RadialGrid& grid);

// ------------------------------------------------------------------- shared

/// (D-1)(D-3)/(4 r^2) for the oscillator; 0 for GPT, whose V_eff,m already
/// absorbs it.
double centrifugal_solver_term(int D, int l, double r, Family family = Family::oscillator);

/// 1 / sqrt(integral of chi^2 over (0, inf)) for the bare chi.
double chi_numeric_norm_constant(const OscillatorModel& model, int n);
double chi_numeric_norm_constant(const GptModel& model, int n);

/// The potential of the chi equation as a callable.
RealFunction solver_potential(const OscillatorModel& model);
RealFunction solver_potential(const GptModel& model);

}  // namespace xeop

#endif  // XEOP_POTENTIALS_HPP
