// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef XEOP_SUSYQM_HPP
#define XEOP_SUSYQM_HPP

#include <string>
#include <utility>
#include <vector>

#include "xeop/grid.hpp"
#include "xeop/potentials.hpp"

namespace xeop {

/// W and W' at a single point.
struct SuperpotentialValue {
  double W = 0.0;
  double dW = 0.0;
};

/// W = -(d/dr) ln chi_0 from the analytic ground state and its analytic
/// derivative. W' is analytic too.
SuperpotentialValue superpotential_at(const OscillatorModel& model, double r);
SuperpotentialValue superpotential_at(const GptModel& model, double r);

/// Ground-state energy of the solver potential, so that
/// W^2 - W' = V_solver - E0. 0 for the oscillator, -A'^2 for GPT.
double factorization_energy(const OscillatorModel& model);
double factorization_energy(const GptModel& model);

struct SuperpotentialProfile {
  RadialGrid grid;
  std::vector<double> W;
  std::vector<double> dW;
  std::string source;
  double factorization_energy = 0.0;
};

SuperpotentialProfile superpotential(const OscillatorModel& model, const RadialGrid& grid);
/// Throws PoleError if the model has a pole on the grid.
SuperpotentialProfile superpotential(const GptModel& model, const RadialGrid& grid);

struct PartnerPotentials {
  std::vector<double> minus;  ///< W^2 - W'
  std::vector<double> plus;   ///< W^2 + W'
};

PartnerPotentials partner_potentials(const SuperpotentialProfile& profile);

/// V- and V+ as callables, for the eigensolver.
std::pair<RealFunction, RealFunction> partner_functions(const OscillatorModel& model);
std::pair<RealFunction, RealFunction> partner_functions(const GptModel& model);

struct ShapeInvarianceReport {
  RadialGrid grid;
  std::vector<double> difference;  ///< V+(r; a1) - V-(r; a2)
  double mean_R = 0.0;
  double max_deviation = 0.0;      ///< max |difference - mean_R|
  double tolerance = 0.0;
  bool passed = false;             ///< max_deviation <= tolerance * |mean_R|
  std::string parameter_map;
};

/// [0.1, 10] with 2000 nodes. Keeps the 1/r^2 terms small enough that a
/// relative 1e-8 comparison is not swamped by cancellation.
RadialGrid shape_invariance_grid();

/// V+ at l against V- at l + 1.
ShapeInvarianceReport shape_invariance_check(const OscillatorModel& model, const RadialGrid& grid,
                                             double tolerance);

/// V+ at A' against V- at A' - 1 with B' fixed. Throws ParameterError if the
/// partner has A' - 1 < 1, PoleError if either model has a pole on the grid.
ShapeInvarianceReport shape_invariance_check(const GptModel& model, const RadialGrid& grid, double tolerance);

/// Same comparison for the unapproximated GPT potential in D dimensions
/// (A -> A - 1 at fixed B). No closed-form ground state exists, so W comes
/// from the numeric ground state by central differences. Deviation is taken
/// over [0.3, 6]. Not constant unless D = 3.
ShapeInvarianceReport exact_gpt_shape_invariance(double A, double B, int D, int m, double tolerance);

}  // namespace xeop

#endif  // XEOP_SUSYQM_HPP
