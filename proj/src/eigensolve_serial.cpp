// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels. Kept line-for-line parallel to the OpenMP
// versions in eigensolve.cpp so tests can compare them bit for bit.

#include <cmath>

#include "xeop/eigensolve.hpp"
#include "xeop/error.hpp"

namespace xeop {

DiscretizedHamiltonian build_hamiltonian_serial(const RealFunction& potential, const RadialGrid& grid) {
  const double h = grid.h();
  const std::size_t interior = grid.size() - 2;
  DiscretizedHamiltonian H{grid, std::vector<double>(interior), -1.0 / (h * h)};
  for (std::size_t i = 0; i < interior; ++i) {
    const double r = grid.node(i + 1);
    const double v = potential(r);
    if (!std::isfinite(v)) throw NonFiniteError("hamiltonian: non-finite potential sample", r);
    H.diagonal[i] = 2.0 / (h * h) + v;
  }
  return H;
}

EigenResult lowest_eigenpairs_serial(const DiscretizedHamiltonian& H, int k) {
  detail::check_eigen_request(H, k);
  double lower = 0.0;
  double upper = 0.0;
  detail::gershgorin(H, lower, upper);
  EigenResult result{H.grid, std::vector<double>(k), std::vector<std::vector<double>>(k)};
  for (int j = 0; j < k; ++j) {
    detail::eigenpair(H, j, lower, upper, result.eigenvalues[j], result.eigenvectors[j]);
  }
  return result;
}

}  // namespace xeop
