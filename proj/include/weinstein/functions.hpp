#pragma once

#include <optional>
#include <string>

#include "weinstein/grid.hpp"
#include "weinstein/polynomial.hpp"

namespace weinstein {

/// A closed-form test function together with the box it needs.
/// Built-in specs:
///   gaussian:a=1             e^{-a ||x||^2}
///   bump:R=1,eps=0.25        e^{-eps / (1 - ||x/R||^2)} inside the ball of radius R
///   heat:t=0.5               heat kernel E_t
///   poly-gauss:a=1,poly=[{"nu":[2,0],"coeff":"1/2"}, ...]   P(x) e^{-a ||x||^2}
/// poly= must come last; it takes the rest of the string.
struct FunctionSpec {
  std::string label;
  SpatialFn fn;
  std::optional<double> support_radius;
  double extent = 0.0;           // spatial half-width with tail below ~1e-13
  double spectral_extent = 0.0;  // 0: derive from the spatial grid
};

FunctionSpec parse_function_spec(const std::string& spec, const AlphaParam& p);

/// Polynomial from [{"nu":[...], "coeff": number or "p/q"}, ...].
RationalPolynomial parse_polynomial_json(const std::string& text, int dims);

/// Node count per axis: WEINSTEIN_DEFAULT_RESOLUTION if set, else `fallback`.
int default_resolution(int fallback = 64);

/// Gauss-Legendre box of the spec's extent on every axis.
GridPtr default_grid(const AlphaParam& p, const FunctionSpec& f, int nodes);
/// Spectral companion: the spec's spectral extent when it has one.
GridPtr default_spectral_grid(const AlphaParam& p, const FunctionSpec& f, int nodes);

SampledFunction sample(const FunctionSpec& f, GridPtr grid);

}  // namespace weinstein
