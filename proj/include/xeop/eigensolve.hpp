// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef XEOP_EIGENSOLVE_HPP
#define XEOP_EIGENSOLVE_HPP

#include <vector>

#include "xeop/grid.hpp"

namespace xeop {

/// Second-order finite-difference form of -chi'' + V chi on a RadialGrid with
/// chi = 0 at both ends. Only the n_points - 2 interior nodes are unknowns:
/// diagonal 2/h^2 + V(r_i), constant off-diagonal -1/h^2.
struct DiscretizedHamiltonian {
  RadialGrid grid;
  std::vector<double> diagonal;
  double off_diagonal = 0.0;

  std::size_t dimension() const noexcept { return diagonal.size(); }
};

/// Lowest eigenpairs. Eigenvalues ascending; eigenvectors are sampled on all
/// grid nodes (zero at both ends), unit-normalized with trapezoidal weights
/// and signed so that the first significant sample is positive.
struct EigenResult {
  RadialGrid grid;
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
};

/// Assemble the matrix. OpenMP-parallel over nodes. Throws NonFiniteError
/// naming the node if V is NaN or infinite there.
DiscretizedHamiltonian build_hamiltonian(const RealFunction& potential, const RadialGrid& grid);

/// Serial reference for build_hamiltonian.
DiscretizedHamiltonian build_hamiltonian_serial(const RealFunction& potential, const RadialGrid& grid);

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
int sturm_count(const DiscretizedHamiltonian& H, double x);

/// k lowest eigenpairs, 1 <= k <= 12: bisection on sturm_count, then inverse
/// iteration. Each eigenpair is independent, so the OpenMP version
/// distributes them over threads; results are identical to the serial
/// reference. Throws ConvergenceError if inverse iteration does not reach a
/// residual of 1e-10 (relative to max(1, |H|_inf)) in 100 iterations.
EigenResult lowest_eigenpairs(const DiscretizedHamiltonian& H, int k);

/// Serial reference for lowest_eigenpairs.
EigenResult lowest_eigenpairs_serial(const DiscretizedHamiltonian& H, int k);

/// |<chi_numeric, chi_analytic>| with both unit-normalized on the grid
/// (trapezoidal weights).
double eigenfunction_overlap(const EigenResult& result, const RealFunction& analytic, int index);

/// Convenience: assemble and solve.
EigenResult solve_lowest(const RealFunction& potential, const RadialGrid& grid, int k);

namespace detail {

// Single eigenpair for index j (0-based); shared by both drivers.
void eigenpair(const DiscretizedHamiltonian& H, int j, double lower, double upper, double& value,
               std::vector<double>& vector);
void gershgorin(const DiscretizedHamiltonian& H, double& lower, double& upper);
void check_eigen_request(const DiscretizedHamiltonian& H, int k);

}  // namespace detail

}  // namespace xeop

#endif  // XEOP_EIGENSOLVE_HPP
