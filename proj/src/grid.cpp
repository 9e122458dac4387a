// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include "xeop/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "parallel.hpp"
#include "xeop/error.hpp"

namespace xeop {

RadialGrid::RadialGrid(double r_min, double r_max, std::size_t n_points)
    : r_min_(r_min), r_max_(r_max), n_(n_points), h_(0.0) {
  if (!(r_min > 0.0)) throw ParameterError("grid: r_min must be > 0");
  if (!(r_max > r_min)) throw ParameterError("grid: r_max must exceed r_min");
  if (n_points < 3) throw ParameterError("grid: need at least 3 points");
  h_ = (r_max - r_min) / static_cast<double>(n_points - 1);
}

std::vector<double> RadialGrid::nodes() const {
  std::vector<double> r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = node(i);
  return r;
}

std::vector<double> sample_on_grid(const RealFunction& f, const RadialGrid& grid) {
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<double> out(grid.size());
  detail::LoopExceptions errors;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    errors.run(i, [&] { out[i] = f(grid.node(static_cast<std::size_t>(i))); });
  }
  errors.rethrow();
  return out;
}

std::vector<double> sample_on_grid_serial(const RealFunction& f, const RadialGrid& grid) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = f(grid.node(i));
  return out;
}

int count_sign_changes(const std::vector<double>& samples, double rel_threshold) {
  double peak = 0.0;
  for (double v : samples) peak = std::max(peak, std::abs(v));
  const double floor = rel_threshold * peak;
  int changes = 0;
  int last = 0;
  for (double v : samples) {
    if (std::abs(v) <= floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t default_grid_points() {
  if (const char* env = std::getenv("XEOP_DEFAULT_POINTS")) {
    try {
      const long v = std::stol(env);
      if (v >= 3) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 4000;
}

}  // namespace xeop
