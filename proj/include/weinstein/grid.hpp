#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weinstein/special_functions.hpp"

namespace weinstein {

using Point = std::vector<double>;
/// Pointwise evaluator of a function on R^{d+1}_+ (argument has d+1 entries).
using SpatialFn = std::function<Complex(std::span<const double>)>;

enum class AxisRule { kTrapezoid, kGaussLegendre, kCustom };

struct GridAxis {
  std::vector<double> nodes;
  std::vector<double> weights;
  double extent = 0.0;
  AxisRule rule = AxisRule::kCustom;
};

/// Tensor quadrature for d mu_alpha on [-X_1,X_1] x ... x [-X_d,X_d] x (0, X_{d+1}].
/// The radial factor x_{d+1}^{2 alpha + 1} is folded into the last-axis weights.
/// Flat indices are row-major with the last axis varying fastest.
class BoxGrid {
 public:
  BoxGrid(AlphaParam param, std::vector<GridAxis> axes);

  const AlphaParam& param() const { return param_; }
  int dims() const { return static_cast<int>(axes_.size()); }
  const GridAxis& axis(int j) const { return axes_[static_cast<std::size_t>(j)]; }
  std::size_t size() const { return size_; }
  std::size_t axis_size(int j) const { return axis(j).nodes.size(); }

  /// Multi-index of a flat index.
  std::vector<std::size_t> unravel(std::size_t flat) const;
  void point(std::size_t flat, std::span<double> out) const;
  Point point(std::size_t flat) const;
  double weight(std::size_t flat) const;

  /// Largest gap between consecutive nodes on any axis.
  double spacing() const;
  /// max ||x|| over the nodes.
  double max_radius() const;
  /// True if the closed ball of radius r about the origin lies in the box.
  bool contains_ball(double r) const;

 private:
  AlphaParam param_;
  std::vector<GridAxis> axes_;
  std::size_t size_ = 0;
};

using GridPtr = std::shared_ptr<const BoxGrid>;

/// Builds a grid on the truncated box. counts >= 8 and extents > 0 on every axis.
GridPtr build_box_grid(const AlphaParam& p, std::span<const double> extents,
                       std::span<const int> counts, AxisRule rule);
/// Same extent and count on every axis.
GridPtr build_box_grid(const AlphaParam& p, double extent, int count, AxisRule rule);

/// Complex samples on a BoxGrid plus metadata. `source` is the callable the
/// samples came from, when there is one; off-grid evaluation prefers it over
/// interpolation. It is not serialized.
struct SampledFunction {
  GridPtr grid;
  std::vector<Complex> values;
  std::optional<double> support_radius;
  std::string label;
  SpatialFn source;

  const AlphaParam& param() const { return grid->param(); }
};

/// Throws ValidationError if values do not match the grid or the declared support
/// is violated (|value| != 0 at a node with ||x|| > R).
void validate(const SampledFunction& f);

/// Samples fn at every node. With a declared support radius R, nodes with
/// ||x|| > R are set to exactly zero.
SampledFunction sample(GridPtr grid, const SpatialFn& fn, std::string label = {},
                       std::optional<double> support_radius = std::nullopt);

SampledFunction zero_function(GridPtr grid, std::string label = "zero");

/// Quadrature approximation of int f d mu_alpha over the box.
Complex integrate(const SampledFunction& f);

/// Weighted p-norm, p in [1, inf]; p = inf is the max of |values|.
double lp_norm(const SampledFunction& f, double p);

/// max |f - g| / max |g| over the nodes of a shared grid.
double sup_relative_error(std::span<const Complex> f, std::span<const Complex> g);

/// Tensor cubic Lagrange interpolation of the samples. The last axis is extended
/// evenly across 0; outside the box the interpolant is 0.
SpatialFn interpolant(const SampledFunction& f);

/// Off-grid evaluator: the source callable (masked to the declared support) if
/// present, otherwise interpolant(f).
SpatialFn evaluator(const SampledFunction& f);

double norm(std::span<const double> x);

/// Nodes on the half-sphere S^d_+ with weights for d sigma_alpha = t_{d+1}^{2 alpha+1} d sigma.
struct SphereGrid {
  AlphaParam param;
  std::vector<double> coords;  // row-major, dims() entries per node
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  std::span<const double> direction(std::size_t k) const {
    const auto n = static_cast<std::size_t>(param.dims());
    return {coords.data() + k * n, n};
  }
  double total_measure() const;
};

/// d = 1 only: t = (cos phi, sin phi), phi in (0, pi). Gauss-Jacobi(alpha, alpha)
/// in u = cos phi, which carries the factor sin^{2 alpha+1} phi d phi exactly.
SphereGrid build_sphere_grid(const AlphaParam& p, int resolution);

}  // namespace weinstein
