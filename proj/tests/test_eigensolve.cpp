// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "xeop/eigensolve.hpp"
#include "xeop/error.hpp"
#include "xeop/potentials.hpp"

using Catch::Matchers::WithinAbs;

namespace {

double trapezoid_norm(const std::vector<double>& v, double h) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i == 0 || i + 1 == v.size() ? 0.5 : 1.0) * h * v[i] * v[i];
  return s;
}

}  // namespace

TEST_CASE("particle in a box", "[eigensolve]") {
  const double pi = std::numbers::pi;
  const xeop::RadialGrid grid(0.001, pi + 0.001, 4000);
  const auto res = xeop::solve_lowest([](double) { return 0.0; }, grid, 3);
  for (int n = 0; n < 3; ++n) CHECK_THAT(res.eigenvalues[n], WithinAbs((n + 1.0) * (n + 1.0), 1e-3));
}

TEST_CASE("half oscillator keeps the odd states", "[eigensolve]") {
  const xeop::RadialGrid grid(1e-4, 20.0, 4000);
  const auto res = xeop::solve_lowest([](double r) { return 0.25 * r * r; }, grid, 2);
  CHECK_THAT(res.eigenvalues[0], WithinAbs(1.5, 1e-3));
  CHECK_THAT(res.eigenvalues[1], WithinAbs(3.5, 1e-3));
  // The same spectrum shifted by -3 omega/2 is the m = 0, D = 3, l = 0 model.
  const xeop::OscillatorModel M(1.0, 3, 0, 0);
  const auto model = xeop::solve_lowest(xeop::solver_potential(M), grid, 2);
  CHECK_THAT(model.eigenvalues[0], WithinAbs(res.eigenvalues[0] - 1.5, 1e-9));
  CHECK_THAT(model.eigenvalues[1], WithinAbs(res.eigenvalues[1] - 1.5, 1e-9));
}

TEST_CASE("second-order convergence", "[eigensolve]") {
  const xeop::OscillatorModel M(1.0, 3, 0, 1);
  const auto V = xeop::solver_potential(M);
  // The wall at r_min shifts the continuum limit by O(r_min), so measure the
  // order from successive differences rather than against 2 omega.
  std::vector<double> E;
  for (std::size_t points : {1001, 2001, 4001, 8001}) {
    E.push_back(xeop::solve_lowest(V, xeop::RadialGrid(1e-4, 20.0, points), 2).eigenvalues[1]);
  }
  const double order1 = std::log2((E[0] - E[1]) / (E[1] - E[2]));
  const double order2 = std::log2((E[1] - E[2]) / (E[2] - E[3]));
  CHECK_THAT(E[3], WithinAbs(oracle::oscillator_energy(1.0, 1), 1e-3));
  INFO("orders " << order1 << " " << order2);
  CHECK(order1 >= 1.8);
  CHECK(order1 <= 2.2);
  CHECK(order2 >= 1.8);
  CHECK(order2 <= 2.2);
}

TEST_CASE("extended spectra on the default grids", "[eigensolve]") {
  const xeop::OscillatorModel osc(1.0, 3, 0, 1);
  const auto a = xeop::solve_lowest(xeop::solver_potential(osc), xeop::RadialGrid(1e-4, 20.0, 4000), 4);
  for (int n = 0; n < 4; ++n) CHECK_THAT(a.eigenvalues[n], WithinAbs(oracle::oscillator_energy(1.0, n), 2e-3));

  const xeop::GptModel gpt(2.5, 5.0, 3, 0, 1);
  const auto b = xeop::solve_lowest(xeop::solver_potential(gpt), xeop::RadialGrid(1e-4, 25.0, 4000), 3);
  for (int n = 0; n < 3; ++n) CHECK_THAT(b.eigenvalues[n], WithinAbs(oracle::gpt_energy(2.5, n), 5e-3));
}

TEST_CASE("eigen result invariants", "[eigensolve][property]") {
  for (int m = 0; m <= 2; ++m) {
    const xeop::OscillatorModel M(0.8, 4, 1, m);
    const auto grid = xeop::default_grid(M);
    const auto H = xeop::build_hamiltonian(xeop::solver_potential(M), grid);
    CHECK(H.dimension() == grid.size() - 2);
    CHECK(H.off_diagonal == Catch::Approx(-1.0 / (grid.h() * grid.h())));
    const auto res = xeop::lowest_eigenpairs(H, 6);
    for (int n = 0; n < 6; ++n) {
      const auto& v = res.eigenvectors[n];
      REQUIRE(v.size() == grid.size());
      CHECK(v.front() == 0.0);
      CHECK(v.back() == 0.0);
      CHECK_THAT(trapezoid_norm(v, grid.h()), WithinAbs(1.0, 1e-12));
      CHECK(xeop::count_sign_changes(v) == n);
      if (n > 0) CHECK(res.eigenvalues[n] > res.eigenvalues[n - 1]);
      // The first significant sample is positive.
      double peak = 0.0;
      for (double x : v) peak = std::max(peak, std::abs(x));
      for (double x : v) {
        if (std::abs(x) > 1e-8 * peak) {
          CHECK(x > 0.0);
          break;
        }
      }
      // Sturm count brackets exactly this eigenvalue.
      CHECK(xeop::sturm_count(H, res.eigenvalues[n] + 1e-8) - xeop::sturm_count(H, res.eigenvalues[n] - 1e-8) == 1);
      CHECK(xeop::sturm_count(H, res.eigenvalues[n] - 1e-8) == n);
    }
  }
}

TEST_CASE("sturm count on a known matrix", "[eigensolve]") {
  // tridiag(-1, 2, -1) of size 4 has eigenvalues 2 - 2 cos(k pi / 5).
  const xeop::RadialGrid grid(1.0, 6.0, 6);  // h = 1
  const auto H = xeop::build_hamiltonian([](double) { return 0.0; }, grid);
  REQUIRE(H.dimension() == 4);
  for (int k = 1; k <= 4; ++k) {
    const double lambda = 2.0 - 2.0 * std::cos(k * std::numbers::pi / 5.0);
    CHECK(xeop::sturm_count(H, lambda - 1e-9) == k - 1);
    CHECK(xeop::sturm_count(H, lambda + 1e-9) == k);
  }
  const auto res = xeop::lowest_eigenpairs(H, 4);
  for (int k = 1; k <= 4; ++k) {
    CHECK_THAT(res.eigenvalues[k - 1], WithinAbs(2.0 - 2.0 * std::cos(k * std::numbers::pi / 5.0), 1e-13));
  }
}

TEST_CASE("overlaps", "[eigensolve]") {
  const xeop::OscillatorModel m0(1.0, 3, 0, 0);
  const auto grid = xeop::default_grid(m0);
  const auto r0 = xeop::solve_lowest(xeop::solver_potential(m0), grid, 2);
  CHECK(xeop::eigenfunction_overlap(r0, [&](double r) { return xeop::oscillator_chi(m0, 0, r); }, 0) >= 0.999999);

  const xeop::OscillatorModel m1(1.0, 3, 0, 1);
  const auto r1 = xeop::solve_lowest(xeop::solver_potential(m1), grid, 2);
  CHECK(xeop::eigenfunction_overlap(r1, [&](double r) { return xeop::oscillator_chi(m1, 0, r); }, 0) >= 0.99999);
  CHECK(xeop::eigenfunction_overlap(r1, [&](double r) { return xeop::oscillator_chi(m1, 1, r); }, 0) <= 0.1);
  CHECK_THROWS_AS(xeop::eigenfunction_overlap(r1, [](double) { return 1.0; }, 2), xeop::IndexError);
}

TEST_CASE("eigensolver errors", "[eigensolve]") {
  const xeop::RadialGrid grid(0.1, 1.0, 50);
  CHECK_THROWS_AS(xeop::build_hamiltonian([](double r) { return r > 0.5 ? std::numeric_limits<double>::infinity() : 0.0; }, grid),
                  xeop::NonFiniteError);
  CHECK_THROWS_AS(xeop::build_hamiltonian_serial([](double) { return std::numeric_limits<double>::quiet_NaN(); }, grid),
                  xeop::NonFiniteError);
  const auto H = xeop::build_hamiltonian([](double) { return 0.0; }, grid);
  CHECK_THROWS_AS(xeop::lowest_eigenpairs(H, 0), xeop::ParameterError);
  CHECK_THROWS_AS(xeop::lowest_eigenpairs(H, 13), xeop::ParameterError);
  const xeop::RadialGrid tiny(0.1, 1.0, 5);
  CHECK_THROWS_AS(xeop::lowest_eigenpairs(xeop::build_hamiltonian([](double) { return 0.0; }, tiny), 4),
                  xeop::ParameterError);
}

TEST_CASE("deterministic for fixed inputs", "[eigensolve]") {
  const xeop::GptModel M(2.5, 5.0, 4, 1, 2);
  const auto grid = xeop::default_grid(M);
  const auto a = xeop::solve_lowest(xeop::solver_potential(M), grid, 3);
  const auto b = xeop::solve_lowest(xeop::solver_potential(M), grid, 3);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);
}
