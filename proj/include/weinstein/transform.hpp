#pragma once

#include <span>
#include <vector>

#include "weinstein/grid.hpp"
#include "weinstein/kernel.hpp"

namespace weinstein {

enum class TransformMode {
  kDirect,     // dense sum over every (input, output) node pair
  kSeparable,  // axis-by-axis contraction of the tensor-product kernel
};

enum class TransformDirection {
  kForward,  // sum_x f(x) Lambda(lambda, x) w(x)
  kInverse,  // C_{alpha,d} sum_lambda g(lambda) Lambda(-x, lambda) w(lambda)
};

/// Kernel tables between two tensor grids. Because Lambda factors into 1-D
/// exponentials and one Bessel factor, a plan stores one table per axis and
/// reuses it for every input. Plans are immutable; apply() is const and
/// may run concurrently.
class TransformPlan {
 public:
  TransformPlan(GridPtr input, GridPtr output, TransformMode mode = TransformMode::kSeparable);

  const GridPtr& input() const { return input_; }
  const GridPtr& output() const { return output_; }
  TransformMode mode() const { return mode_; }

  std::vector<Complex> apply(std::span<const Complex> values, TransformDirection dir) const;

 private:
  std::vector<Complex> apply_separable(std::vector<Complex> weighted, TransformDirection dir) const;
  std::vector<Complex> apply_direct(const std::vector<Complex>& weighted,
                                    TransformDirection dir) const;

  GridPtr input_;
  GridPtr output_;
  TransformMode mode_;
  // tables_[j] is (output nodes) x (input nodes), row-major.
  // Axes j < d hold exp(-i out*in); the last holds j_alpha(out*in).
  std::vector<std::vector<Complex>> tables_;
};

/// Default spectral grid mirroring a spatial one: same counts, extent n_j / (2 X_j).
GridPtr default_spectral_grid(const BoxGrid& spatial);

/// F_{W,alpha} f sampled on the nodes of `spectral`.
SampledFunction forward(const SampledFunction& f, GridPtr spectral,
                        TransformMode mode = TransformMode::kSeparable);

/// C_{alpha,d} F g(-x): the inverse transform sampled on the nodes of `spatial`.
SampledFunction inverse(const SampledFunction& g, GridPtr spatial,
                        TransformMode mode = TransformMode::kSeparable);

/// Quadrature of sum f(x) Lambda(lambda, x) w(x) at arbitrary (possibly complex) points.
std::vector<Complex> forward_at_points(const SampledFunction& f,
                                       std::span<const SpectralPoint> points);

/// Entire extension of F f. Requires a declared support radius.
std::vector<Complex> forward_at_complex(const SampledFunction& f,
                                        std::span<const SpectralPoint> points);

/// Inverse transform evaluated at arbitrary real points of R^{d+1}_+.
std::vector<Complex> inverse_at_points(const SampledFunction& g, std::span<const Point> points);

/// | ||f||^2 - C ||F f||^2 | / ||f||^2.
double plancherel_defect(const SampledFunction& f, GridPtr spectral,
                         TransformMode mode = TransformMode::kSeparable);

/// | <f,g> - C <F f, F g> | / (||f|| ||g||), both inner products in L^2_alpha.
double parseval_defect(const SampledFunction& f, const SampledFunction& g, GridPtr spectral,
                       TransformMode mode = TransformMode::kSeparable);

/// Weighted inner product sum f conj(g) w on a shared grid.
Complex inner_product(const SampledFunction& f, const SampledFunction& g);

}  // namespace weinstein
