#include "weinstein/heat.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "weinstein/errors.hpp"

namespace weinstein {

HeatParams::HeatParams(AlphaParam param, double time) : p(param), t(time) {
  if (!(time > 0.0) || !std::isfinite(time)) {
    throw DomainError("heat kernel needs t > 0, got " + std::to_string(time));
  }
}

double heat_kernel(const HeatParams& h, std::span<const double> x) {
  if (static_cast<int>(x.size()) != h.p.dims()) throw ValidationError("point needs d+1 coordinates");
  const double half_d = h.p.d() / 2.0;
  const double log_c = std::log(2.0) - half_d * std::log(boost::math::constants::pi<double>()) -
                       log_gamma(h.p.alpha() + 1.0) -
                       (h.p.alpha() + 1.0 + half_d) * std::log(4.0 * h.t);
  double r2 = 0.0;
  for (double c : x) r2 += c * c;
  return std::exp(log_c - r2 / (4.0 * h.t));
}

SpatialFn heat_kernel_fn(const HeatParams& h) {
  return [h](std::span<const double> x) { return Complex(heat_kernel(h, x)); };
}

SampledFunction heat_evolve(const SampledFunction& f, double t, GridPtr spectral,
                            TransformMode mode) {
  const HeatParams h(f.param(), t);
  if (!spectral) spectral = default_spectral_grid(*f.grid);
  SampledFunction ff = forward(f, spectral, mode);
  std::vector<double> z(static_cast<std::size_t>(f.param().dims()));
  for (std::size_t k = 0; k < ff.values.size(); ++k) {
    spectral->point(k, z);
    double l2 = 0.0;
    for (double c : z) l2 += c * c;
    ff.values[k] *= std::exp(-h.t * l2);
  }
  SampledFunction r = inverse(ff, f.grid, mode);
  r.label = "heat[" + f.label + "]";
  return r;
}

double heat_time_derivative(const HeatParams& h, std::span<const double> x, double dt) {
  if (!(dt > 0.0) || !(dt < h.t)) throw ValidationError("time step must satisfy 0 < dt < t");
  return (heat_kernel(HeatParams(h.p, h.t + dt), x) - heat_kernel(HeatParams(h.p, h.t - dt), x)) /
         (2.0 * dt);
}

double heat_equation_residual(const HeatParams& h, std::span<const double> x, double dt, double dx) {
  if (static_cast<int>(x.size()) != h.p.dims()) throw ValidationError("point needs d+1 coordinates");
  if (!(dx > 0.0)) throw ValidationError("space step must be positive");
  if (!(x.back() >= 4.0 * dx)) {
    throw ValidationError("stencil reaches the boundary: need x_{d+1} >= 4 dx");
  }
  const double dt_e = heat_time_derivative(h, x, dt);

  std::vector<double> y(x.begin(), x.end());
  const double e0 = heat_kernel(h, x);
  double lap = 0.0;
  const std::size_t last = x.size() - 1;
  for (std::size_t j = 0; j <= last; ++j) {
    y[j] = x[j] + dx;
    const double ep = heat_kernel(h, y);
    y[j] = x[j] - dx;
    const double em = heat_kernel(h, y);
    y[j] = x[j];
    lap += (ep - 2.0 * e0 + em) / (dx * dx);
    if (j == last) lap += (2.0 * h.p.alpha() + 1.0) / x[j] * (ep - em) / (2.0 * dx);
  }
  return std::abs(dt_e - lap);
}

}  // namespace weinstein
