#pragma once

#include <span>

#include "weinstein/grid.hpp"
#include "weinstein/transform.hpp"

namespace weinstein {

struct HeatParams {
  HeatParams(AlphaParam param, double time);  // DomainError unless time > 0

  AlphaParam p;
  double t;
};

/// E_t(x) = 2 / (pi^{d/2} Gamma(alpha+1) (4t)^{alpha+1+d/2}) exp(-||x||^2 / 4t).
double heat_kernel(const HeatParams& h, std::span<const double> x);
SpatialFn heat_kernel_fn(const HeatParams& h);

/// inverse(F f . e^{-t ||lambda||^2}) on f's grid.
SampledFunction heat_evolve(const SampledFunction& f, double t, GridPtr spectral = nullptr,
                            TransformMode mode = TransformMode::kSeparable);

/// |d_t E - (Delta_d + L_alpha) E| at x by central differences. Requires
/// x_{d+1} >= 4 dx and dt < t.
double heat_equation_residual(const HeatParams& h, std::span<const double> x, double dt, double dx);

/// Central-difference d_t E at x, the scale for residuals.
double heat_time_derivative(const HeatParams& h, std::span<const double> x, double dt);

}  // namespace weinstein
