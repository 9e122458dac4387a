// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>

#include "xeop/error.hpp"
#include "xeop/grid.hpp"

TEST_CASE("RadialGrid construction", "[grid]") {
  const xeop::RadialGrid g(1e-4, 20.0, 4000);
  CHECK(g.size() == 4000);
  CHECK(g.node(0) == 1e-4);
  CHECK(g.node(3999) == 20.0);
  CHECK(g.h() == Catch::Approx((20.0 - 1e-4) / 3999.0));
  const auto r = g.nodes();
  REQUIRE(r.size() == 4000);
  for (std::size_t i = 1; i < r.size(); ++i) REQUIRE(r[i] > r[i - 1]);

  CHECK_THROWS_AS(xeop::RadialGrid(0.0, 1.0, 10), xeop::ParameterError);
  CHECK_THROWS_AS(xeop::RadialGrid(1.0, 1.0, 10), xeop::ParameterError);
  CHECK_THROWS_AS(xeop::RadialGrid(0.1, 1.0, 2), xeop::ParameterError);
  CHECK(xeop::RadialGrid(0.1, 1.0, 5) == xeop::RadialGrid(0.1, 1.0, 5));
}

TEST_CASE("sampling and sign changes", "[grid]") {
  const xeop::RadialGrid g(0.01, 10.0, 1001);
  const auto s = xeop::sample_on_grid([](double r) { return std::sin(r); }, g);
  CHECK(xeop::count_sign_changes(s) == 3);
  // Tiny tail noise is ignored.
  std::vector<double> v{1.0, 0.5, -0.5, 1e-12, -1e-12, 1e-13};
  CHECK(xeop::count_sign_changes(v) == 1);
  CHECK(xeop::count_sign_changes({}) == 0);
}

TEST_CASE("sampling reports the lowest failing node", "[grid]") {
  const xeop::RadialGrid g(0.1, 1.0, 200);
  auto f = [](double r) { return r > 0.5 ? std::numeric_limits<double>::quiet_NaN() : r; };
  auto thrower = [](double r) -> double {
    if (r > 0.5) throw xeop::DomainError("bad r " + std::to_string(r));
    return r;
  };
  CHECK_NOTHROW(xeop::sample_on_grid(f, g));
  try {
    xeop::sample_on_grid(thrower, g);
    FAIL("expected DomainError");
  } catch (const xeop::DomainError& e) {
    std::size_t first = 0;
    while (g.node(first) <= 0.5) ++first;
    CHECK(std::string(e.what()) == "bad r " + std::to_string(g.node(first)));
  }
}

TEST_CASE("default grid size honours the environment", "[grid]") {
  ::unsetenv("XEOP_DEFAULT_POINTS");
  CHECK(xeop::default_grid_points() == 4000);
  ::setenv("XEOP_DEFAULT_POINTS", "1234", 1);
  CHECK(xeop::default_grid_points() == 1234);
  ::setenv("XEOP_DEFAULT_POINTS", "garbage", 1);
  CHECK(xeop::default_grid_points() == 4000);
  ::setenv("XEOP_DEFAULT_POINTS", "-5", 1);
  CHECK(xeop::default_grid_points() == 4000);
  ::unsetenv("XEOP_DEFAULT_POINTS");
}
