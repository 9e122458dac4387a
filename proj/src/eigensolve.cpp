// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include "xeop/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "parallel.hpp"
#include "xeop/error.hpp"

namespace xeop {

namespace {

constexpr int kMaxEigenpairs = 12;
constexpr int kMaxInverseIterations = 100;
constexpr double kResidualTol = 1e-10;

double inf_norm(const DiscretizedHamiltonian& H) {
  double worst = 0.0;
  for (double d : H.diagonal) worst = std::max(worst, std::abs(d));
  return worst + 2.0 * std::abs(H.off_diagonal);
}

// LU factorization with partial pivoting of the tridiagonal T - shift I
// (same scheme as LAPACK dgttrf), reused across inverse-iteration steps.
class ShiftedTridiagonalLU {
 public:
  ShiftedTridiagonalLU(const DiscretizedHamiltonian& H, double shift, double tiny)
      : n_(H.dimension()), dl_(n_ > 0 ? n_ - 1 : 0, H.off_diagonal), d_(n_),
        du_(n_ > 0 ? n_ - 1 : 0, H.off_diagonal), du2_(n_ > 1 ? n_ - 2 : 0, 0.0), pivot_(n_, false) {
    for (std::size_t i = 0; i < n_; ++i) d_[i] = H.diagonal[i] - shift;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = tiny;
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n_) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        pivot_[i] = true;
      }
    }
    if (n_ > 0 && d_[n_ - 1] == 0.0) d_[n_ - 1] = tiny;
  }

  void solve(std::vector<double>& b) const {
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (pivot_[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= dl_[i] * b[i];
    }
    for (std::size_t k = n_; k-- > 0;) {
      double v = b[k];
      if (k + 1 < n_) v -= du_[k] * b[k + 1];
      if (k + 2 < n_) v -= du2_[k] * b[k + 2];
      b[k] = v / d_[k];
    }
  }

 private:
  std::size_t n_;
  std::vector<double> dl_, d_, du_, du2_;
  std::vector<bool> pivot_;
};

double residual_norm(const DiscretizedHamiltonian& H, double lambda, const std::vector<double>& x) {
  const std::size_t n = x.size();
  const double e = H.off_diagonal;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = (H.diagonal[i] - lambda) * x[i];
    if (i > 0) v += e * x[i - 1];
    if (i + 1 < n) v += e * x[i + 1];
    sum += v * v;
  }
  return std::sqrt(sum);
}

void normalize2(std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  s = std::sqrt(s);
  for (double& v : x) v /= s;
}

double trapezoid_dot(const std::vector<double>& a, const std::vector<double>& b, double h) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double w = (i == 0 || i + 1 == a.size()) ? 0.5 * h : h;
    s += w * a[i] * b[i];
  }
  return s;
}

}  // namespace

namespace detail {

void check_eigen_request(const DiscretizedHamiltonian& H, int k) {
  if (k < 1 || k > kMaxEigenpairs) throw ParameterError("eigensolve: k must be in [1, 12]");
  if (static_cast<std::size_t>(k) > H.dimension()) throw ParameterError("eigensolve: k exceeds matrix dimension");
}

void gershgorin(const DiscretizedHamiltonian& H, double& lower, double& upper) {
  const double e = std::abs(H.off_diagonal);
  lower = std::numeric_limits<double>::max();
  upper = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < H.dimension(); ++i) {
    const double radius = (i == 0 || i + 1 == H.dimension()) ? e : 2.0 * e;
    lower = std::min(lower, H.diagonal[i] - radius);
    upper = std::max(upper, H.diagonal[i] + radius);
  }
}

void eigenpair(const DiscretizedHamiltonian& H, int j, double lower, double upper, double& value,
               std::vector<double>& vector) {
  const double eps = std::numeric_limits<double>::epsilon();
  double lo = lower;
  double hi = upper;
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi))) break;
    if (sturm_count(H, mid) > j) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  value = 0.5 * (lo + hi);

  const std::size_t n = H.dimension();
  const double scale = std::max(1.0, inf_norm(H));
  const ShiftedTridiagonalLU lu(H, value, eps * scale);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + j);
  normalize2(x);
  bool converged = false;
  for (int it = 0; it < kMaxInverseIterations; ++it) {
    lu.solve(x);
    normalize2(x);
    if (residual_norm(H, value, x) <= kResidualTol * scale) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError("eigensolve: inverse iteration did not converge for index " + std::to_string(j));
  }

  const double h = H.grid.h();
  vector.assign(n + 2, 0.0);
  std::copy(x.begin(), x.end(), vector.begin() + 1);
  const double norm = std::sqrt(trapezoid_dot(vector, vector, h));
  double peak = 0.0;
  for (double v : vector) peak = std::max(peak, std::abs(v));
  double sign = 1.0;
  for (double v : vector) {
    if (std::abs(v) > 1e-8 * peak) {
      sign = v > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  for (double& v : vector) v *= sign / norm;
}

}  // namespace detail

int sturm_count(const DiscretizedHamiltonian& H, double x) {
  const double e2 = H.off_diagonal * H.off_diagonal;
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, e2);
  int count = 0;
  double q = 0.0;
  for (std::size_t i = 0; i < H.dimension(); ++i) {
    q = H.diagonal[i] - x - (i > 0 ? e2 / q : 0.0);
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

DiscretizedHamiltonian build_hamiltonian(const RealFunction& potential, const RadialGrid& grid) {
  const double h = grid.h();
  const auto interior = static_cast<std::ptrdiff_t>(grid.size()) - 2;
  DiscretizedHamiltonian H{grid, std::vector<double>(static_cast<std::size_t>(interior)), -1.0 / (h * h)};
  detail::LoopExceptions errors;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < interior; ++i) {
    errors.run(i, [&] {
      const double r = grid.node(static_cast<std::size_t>(i) + 1);
      const double v = potential(r);
      if (!std::isfinite(v)) throw NonFiniteError("hamiltonian: non-finite potential sample", r);
      H.diagonal[i] = 2.0 / (h * h) + v;
    });
  }
  errors.rethrow();
  return H;
}

EigenResult lowest_eigenpairs(const DiscretizedHamiltonian& H, int k) {
  detail::check_eigen_request(H, k);
  double lower = 0.0;
  double upper = 0.0;
  detail::gershgorin(H, lower, upper);
  EigenResult result{H.grid, std::vector<double>(k), std::vector<std::vector<double>>(k)};
  detail::LoopExceptions errors;
#pragma omp parallel for schedule(dynamic, 1)
  for (int j = 0; j < k; ++j) {
    errors.run(j, [&] { detail::eigenpair(H, j, lower, upper, result.eigenvalues[j], result.eigenvectors[j]); });
  }
  errors.rethrow();
  return result;
}

double eigenfunction_overlap(const EigenResult& result, const RealFunction& analytic, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= result.eigenvalues.size()) {
    throw IndexError("overlap: eigenpair index out of range");
  }
  const auto& numeric = result.eigenvectors[static_cast<std::size_t>(index)];
  const auto exact = sample_on_grid(analytic, result.grid);
  const double h = result.grid.h();
  const double nn = trapezoid_dot(numeric, numeric, h);
  const double ee = trapezoid_dot(exact, exact, h);
  return std::abs(trapezoid_dot(numeric, exact, h)) / std::sqrt(nn * ee);
}

EigenResult solve_lowest(const RealFunction& potential, const RadialGrid& grid, int k) {
  return lowest_eigenpairs(build_hamiltonian(potential, grid), k);
}

}  // namespace xeop
