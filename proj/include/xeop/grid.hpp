// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef XEOP_GRID_HPP
#define XEOP_GRID_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace xeop {

/// Uniform grid r_i = r_min + i h, i = 0..n_points-1, on 0 < r_min < r_max.
class RadialGrid {
 public:
  RadialGrid(double r_min, double r_max, std::size_t n_points);

  double r_min() const noexcept { return r_min_; }
  double r_max() const noexcept { return r_max_; }
  std::size_t size() const noexcept { return n_; }
  double h() const noexcept { return h_; }
  double node(std::size_t i) const noexcept { return i + 1 == n_ ? r_max_ : r_min_ + i * h_; }
  std::vector<double> nodes() const;

  bool operator==(const RadialGrid&) const = default;

 private:
  double r_min_;
  double r_max_;
  std::size_t n_;
  double h_;
};

using RealFunction = std::function<double(double)>;

/// f sampled at every node; OpenMP-parallel over nodes.
std::vector<double> sample_on_grid(const RealFunction& f, const RadialGrid& grid);

/// Serial reference for sample_on_grid.
std::vector<double> sample_on_grid_serial(const RealFunction& f, const RadialGrid& grid);

/// Number of sign changes, ignoring samples below `rel_threshold` times the
/// largest magnitude.
int count_sign_changes(const std::vector<double>& samples, double rel_threshold = 1e-8);

/// Default grid size: XEOP_DEFAULT_POINTS if set to a positive integer, else 4000.
std::size_t default_grid_points();

}  // namespace xeop

#endif  // XEOP_GRID_HPP
