#pragma once

// Kernels, uniform grids and grid-tabulated univariate densities.
//
// Everything here is header-only and templated on the scalar type so tests
// can rerun the same quadrature in extended precision.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mnarmix/error.hpp"

namespace mnarmix {

enum class KernelKind { Gaussian };

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct Kernel {
  KernelKind kind = KernelKind::Gaussian;
  Scalar bandwidth = Scalar(1);

  /// Standardized profile K(u), integrating to one.
  Scalar profile(Scalar u) const {
    using std::exp;
    return exp(-u * u / Scalar(2)) / std::sqrt(Scalar(2) * std::numbers::pi_v<Scalar>);
  }

  /// Scaled kernel (1/h) K(diff / h).
  Scalar operator()(Scalar diff) const { return profile(diff / bandwidth) / bandwidth; }

  /// Half-width outside of which the kernel mass is negligible (< 4e-5).
  Scalar reach() const { return Scalar(4) * bandwidth; }
};

/// Bandwidth n^(-1/5).
template <typename Scalar = double>
Scalar default_bandwidth(Eigen::Index n) {
  if (n < 1) throw Error(ErrorKind::InvalidConfig, "bandwidth needs n >= 1");
  return std::pow(static_cast<Scalar>(n), Scalar(-0.2));
}

/// Uniform grid of `size` nodes covering [lo, hi].
template <typename Scalar>
struct Grid {
  Scalar lo = Scalar(0);
  Scalar hi = Scalar(1);
  Eigen::Index size = 2;

  Scalar step() const { return (hi - lo) / static_cast<Scalar>(size - 1); }
  Scalar node(Eigen::Index g) const {
    return g == size - 1 ? hi : lo + static_cast<Scalar>(g) * step();
  }
  VectorX<Scalar> nodes() const {
    VectorX<Scalar> u(size);
    for (Eigen::Index g = 0; g < size; ++g) u(g) = node(g);
    return u;
  }
};

inline constexpr Eigen::Index kDefaultGridSize = 512;
inline constexpr double kDensityFloorRatio = 1e-12;

template <typename Scalar>
VectorX<Scalar> trapezoid_weights(const Grid<Scalar>& grid) {
  VectorX<Scalar> w = VectorX<Scalar>::Constant(grid.size, grid.step());
  w(0) /= Scalar(2);
  w(grid.size - 1) /= Scalar(2);
  return w;
}

template <typename Scalar, typename Derived>
Scalar trapezoid_integral(const Grid<Scalar>& grid, const Eigen::MatrixBase<Derived>& values) {
  return trapezoid_weights(grid).dot(values.template cast<Scalar>());
}

/// Grid covering the observed values padded by max(4h, 10% of the range) on
/// each side, with at least `min_nodes` nodes and spacing no wider than h/2.
template <typename Scalar, typename Derived>
Grid<Scalar> build_grid(const Eigen::MatrixBase<Derived>& observed, const Kernel<Scalar>& kernel,
                        Eigen::Index min_nodes = kDefaultGridSize) {
  if (observed.size() == 0) throw Error(ErrorKind::EmptyColumn, "cannot build a grid from no values");
  if (min_nodes < 2) throw Error(ErrorKind::InvalidConfig, "grid needs at least 2 nodes");
  const Scalar mn = observed.minCoeff();
  const Scalar mx = observed.maxCoeff();
  const Scalar pad = std::max(kernel.reach(), Scalar(0.1) * (mx - mn));
  Grid<Scalar> grid{mn - pad, mx + pad, min_nodes};
  const Scalar max_step = kernel.bandwidth / Scalar(2);
  if (grid.step() > max_step) {
    using std::ceil;
    grid.size = static_cast<Eigen::Index>(ceil((grid.hi - grid.lo) / max_step)) + 1;
  }
  return grid;
}

/// Univariate density tabulated on a grid; trapezoid integral is one.
template <typename Scalar>
struct GridDensity {
  Grid<Scalar> grid;
  VectorX<Scalar> values;

  Scalar integral() const { return trapezoid_integral(grid, values); }
};

/// Normalizes nonnegative node values to unit trapezoid mass, floors them at
/// kDensityFloorRatio times the peak and renormalizes once.
template <typename Scalar>
GridDensity<Scalar> normalize_density(const Grid<Scalar>& grid, VectorX<Scalar> values) {
  const VectorX<Scalar> w = trapezoid_weights(grid);
  const Scalar mass = w.dot(values);
  if (!(mass > Scalar(0))) throw Error(ErrorKind::DegenerateWeights, "density has zero mass on its grid");
  values /= mass;
  const Scalar floor = static_cast<Scalar>(kDensityFloorRatio) * values.maxCoeff();
  values = values.cwiseMax(floor);
  values /= w.dot(values);
  return {grid, std::move(values)};
}

/// Matrix of scaled kernel values K_h(x_i - u_g), one row per point.
template <typename Scalar, typename Derived>
MatrixX<Scalar> kernel_design(const Eigen::MatrixBase<Derived>& points, const Kernel<Scalar>& kernel,
                              const Grid<Scalar>& grid) {
  MatrixX<Scalar> e(points.size(), grid.size);
  for (Eigen::Index g = 0; g < grid.size; ++g) {
    const Scalar u = grid.node(g);
    for (Eigen::Index i = 0; i < points.size(); ++i) e(i, g) = kernel(static_cast<Scalar>(points(i)) - u);
  }
  return e;
}

/// Weighted kernel density estimate sum_i w_i K_h(x_i - u) / sum_i w_i on the
/// grid nodes, normalized and floored (see normalize_density).
template <typename Scalar, typename D1, typename D2>
GridDensity<Scalar> weighted_kde(const Eigen::MatrixBase<D1>& points, const Eigen::MatrixBase<D2>& weights,
                                 const Kernel<Scalar>& kernel, const Grid<Scalar>& grid) {
  if (points.size() != weights.size()) throw Error(ErrorKind::LengthMismatch, "one weight per point required");
  const Scalar total = weights.template cast<Scalar>().sum();
  if (!(total > Scalar(0))) throw Error(ErrorKind::DegenerateWeights, "kernel density weights sum to zero");
  VectorX<Scalar> raw = kernel_design(points, kernel, grid).transpose() * weights.template cast<Scalar>();
  raw /= total;
  return normalize_density(grid, std::move(raw));
}

/// (S ln p)(x) = integral of K_h(x - u) ln p(u) du by trapezoid quadrature
/// over the density's grid, at an arbitrary point x.
template <typename Scalar>
Scalar smooth_log_at(const GridDensity<Scalar>& p, const Kernel<Scalar>& kernel, Scalar x) {
  using std::log;
  const VectorX<Scalar> w = trapezoid_weights(p.grid);
  Scalar acc = Scalar(0);
  for (Eigen::Index q = 0; q < p.grid.size; ++q) acc += w(q) * kernel(x - p.grid.node(q)) * log(p.values(q));
  return acc;
}

/// Reference O(m^2) evaluation of S ln p at every grid node.
template <typename Scalar>
VectorX<Scalar> smooth_log_density(const GridDensity<Scalar>& p, const Kernel<Scalar>& kernel) {
  VectorX<Scalar> table(p.grid.size);
  for (Eigen::Index g = 0; g < p.grid.size; ++g) table(g) = smooth_log_at(p, kernel, p.grid.node(g));
  return table;
}

/// Same result as smooth_log_density, using the translation invariance of the
/// kernel on a uniform grid: kernel values are tabulated once per node offset
/// and the convolution stops where they underflow to zero.
template <typename Scalar>
VectorX<Scalar> smooth_log_density_fast(const GridDensity<Scalar>& p, const Kernel<Scalar>& kernel) {
  const Eigen::Index m = p.grid.size;
  const Scalar step = p.grid.step();
  VectorX<Scalar> offsets(m);
  Eigen::Index reach = m;
  for (Eigen::Index s = 0; s < m; ++s) {
    offsets(s) = kernel(static_cast<Scalar>(s) * step);
    if (offsets(s) == Scalar(0)) {
      reach = s;
      break;
    }
  }
  const VectorX<Scalar> wl = trapezoid_weights(p.grid).cwiseProduct(p.values.array().log().matrix());
  VectorX<Scalar> table(m);
  for (Eigen::Index g = 0; g < m; ++g) {
    const Eigen::Index q0 = std::max<Eigen::Index>(0, g - reach + 1);
    const Eigen::Index q1 = std::min<Eigen::Index>(m - 1, g + reach - 1);
    Scalar acc = Scalar(0);
    for (Eigen::Index q = q0; q <= q1; ++q) acc += offsets(g > q ? g - q : q - g) * wl(q);
    table(g) = acc;
  }
  return table;
}

/// Linear interpolation of a node table; clamps outside [lo, hi].
template <typename Scalar, typename Derived>
Scalar interp_eval(const Grid<Scalar>& grid, const Eigen::MatrixBase<Derived>& table, Scalar x) {
  if (!(x > grid.lo)) return table(0);
  if (!(x < grid.hi)) return table(grid.size - 1);
  const Scalar pos = (x - grid.lo) / grid.step();
  Eigen::Index g = static_cast<Eigen::Index>(pos);
  if (g >= grid.size - 1) g = grid.size - 2;
  const Scalar frac = pos - static_cast<Scalar>(g);
  if (frac == Scalar(0)) return table(g);
  return (Scalar(1) - frac) * table(g) + frac * table(g + 1);
}

}  // namespace mnarmix
