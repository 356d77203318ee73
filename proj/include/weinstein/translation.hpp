#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weinstein/grid.hpp"
#include "weinstein/transform.hpp"

namespace weinstein {

/// Rule for the angular average over theta in (0, pi) against sin^{2 alpha} theta,
/// written in u = cos theta. Weights include the normalizing prefactor and sum to 1.
struct AngularRule {
  std::vector<double> u;
  std::vector<double> w;
};

AngularRule angular_rule(double alpha, int nodes);

/// tau_x f(y) = c_alpha int_0^pi f(x'+y', sqrt(x^2+y^2+2 x y cos theta)) sin^{2 alpha} theta d theta,
/// with x, y the last coordinates inside the square root.
Complex translate_angular(const SpatialFn& f, std::span<const double> x, std::span<const double> y,
                          const AlphaParam& p, int nodes = 48);

/// tau_x f on every node of `out` (defaults to f's grid). Off-grid values of f come
/// from evaluator(f).
SampledFunction translate_angular(const SampledFunction& f, std::span<const double> x,
                                  GridPtr out = nullptr, int nodes = 48);

/// Spectral multiplier of tau_x: F(tau_x f)(z) = Lambda(-x, z) F f(z).
/// Equal to Lambda(x, z) when x' = 0.
Complex translation_multiplier(const NormalizedBessel& j, std::span<const double> x,
                               std::span<const double> z);

struct SpectralTranslation {
  SampledFunction result;
  double tail_fraction = 0.0;  // share of C|Ff|^2 mass in the outer 20% of the spectral box
  std::optional<std::string> warning;
};

/// tau_x f = C int Lambda(-x, z) Lambda(-y, z) F f(z) d mu_alpha(z) by quadrature on
/// `spectral`, sampled on `out` (defaults to f's grid).
SpectralTranslation translate_spectral(const SampledFunction& f, std::span<const double> x,
                                       GridPtr spectral, GridPtr out = nullptr,
                                       double tail_tolerance = 1e-10);

struct NormCheck {
  double lhs = 0.0;  // ||tau_x f||_{alpha,p}
  double rhs = 0.0;  // ||f||_{alpha,p}
  bool ok = false;   // lhs <= rhs (1 + 1e-6)
};

/// Radius outside which |f| <= 1e-14 max|f| on the grid (the declared radius if set).
double effective_support(const SampledFunction& f);

/// Both norms on f's grid, which must contain the ball of radius
/// effective_support(f) + ||x||; otherwise ValidationError.
NormCheck translation_norm_check(const SampledFunction& f, std::span<const double> x, double p,
                                 int nodes = 48);

/// ||tau_x f - f||_{alpha,p}; f must declare a support radius.
double translation_modulus(const SampledFunction& f, std::span<const double> x, double p,
                           int nodes = 48);

enum class ConvolutionMethod {
  kDirect,    // sum_y tau_x f(-y) g(y) w(y)
  kSpectral,  // inverse(F f . F g)
};

struct ConvolutionOptions {
  int angular_nodes = 32;
  GridPtr spectral;  // default: default_spectral_grid of f's grid
  GridPtr output;    // default: f's grid
  TransformMode mode = TransformMode::kSeparable;
};

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g,
                         ConvolutionMethod method, const ConvolutionOptions& opt = {});

/// Direct route at arbitrary points of R^{d+1}_+.
std::vector<Complex> convolve_direct_at(const SampledFunction& f, const SampledFunction& g,
                                        std::span<const Point> points, int angular_nodes = 32);

}  // namespace weinstein
