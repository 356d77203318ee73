#pragma once

#include <functional>
#include <span>
#include <vector>

#include "weinstein/grid.hpp"
#include "weinstein/kernel.hpp"
#include "weinstein/polynomial.hpp"
#include "weinstein/transform.hpp"

namespace weinstein {

/// Evaluator of a transform at complex spectral points.
using SpectralFn = std::function<Complex(std::span<const Complex>)>;

/// phi_{l,alpha}(lambda) = int_{S^d_+} f(lambda t) P(t) d sigma_alpha(t).
Complex angular_coefficient(const SpatialFn& f, const RealPolynomial& p, double lambda,
                            const SphereGrid& sg);
/// Sampled f: the ball of radius lambda must lie in the grid box.
Complex angular_coefficient(const SampledFunction& f, const RealPolynomial& p, double lambda,
                            const SphereGrid& sg);

enum class CoefficientNormalization {
  kInverseLambda,  // lambda^{-1}, as printed
  kHomogeneous,    // lambda^{-l}, l = degree of P
};

/// Phi_{l,alpha}(lambda) = lambda^{-k} int_{S^d_+} F f(lambda t) P(t) d sigma_alpha(t).
/// lambda may be complex (entire continuation); lambda = 0 is a domain error.
Complex spherical_coefficient(const SpectralFn& ff, const RealPolynomial& p, Complex lambda,
                              const SphereGrid& sg,
                              CoefficientNormalization norm = CoefficientNormalization::kInverseLambda);
/// Same with F f evaluated from the samples of f by forward_at_points.
Complex spherical_coefficient(const SampledFunction& f, const RealPolynomial& p, Complex lambda,
                              const SphereGrid& sg,
                              CoefficientNormalization norm = CoefficientNormalization::kInverseLambda);

/// Radial samples g(r_k) with plain quadrature weights on (0, r_max].
struct RadialSamples {
  std::vector<double> r;
  std::vector<double> w;
  std::vector<Complex> g;
};

RadialSamples sample_radial(const std::function<Complex(double)>& g, double r_max, int count);

/// int_0^inf g(r) j_nu(lambda r) r^{2 nu + 1} dr by quadrature, nu > -1/2.
std::vector<Complex> hankel_transform(double order, const RadialSamples& g,
                                      std::span<const Complex> lambdas);

struct DirectionFit {
  std::vector<double> u;
  double slope = 0.0;      // fitted exponential rate R_u
  double log_power = 0.0;  // beta in log g = R s - beta log s + c
  double residual = 0.0;   // RMS residual of the fit
  std::vector<double> local_slopes;  // consecutive slopes of log g + beta log s in the window
};

struct TypeEstimate {
  double r_hat = 0.0;
  std::vector<DirectionFit> per_direction;
  double s_min = 0.0;
  double s_max = 0.0;
  double c_used = 0.0;  // ||f||_{alpha,1}
};

struct TypeOptions {
  std::vector<std::vector<double>> directions;  // empty: default_directions
  std::vector<double> s_grid;                   // empty: default_s_grid
  int random_directions = 8;
  unsigned seed = 20240611;
};

/// +-e_j for the first d axes, +e_{d+1}, then n_random unit vectors with u_{d+1} >= 0.
std::vector<std::vector<double>> default_directions(const AlphaParam& p, int n_random, unsigned seed);
/// 17 equispaced points on [4, 20].
std::vector<double> default_s_grid();

/// Least-squares fit of log g(s) = R s - beta log s + c over the upper half of s.
DirectionFit fit_exponential_rate(std::span<const double> s, std::span<const double> g);

/// For each direction u, g(s) = |F f(i s u)| is fitted; R_hat is the largest rate.
TypeEstimate estimate_exponential_type(const SampledFunction& f, const TypeOptions& opt = {});

/// Largest s_max for which every kernel evaluation stays within the Bessel working range.
double max_safe_s(const SampledFunction& f, std::span<const std::vector<double>> directions);

struct BoundReport {
  double max_ratio = 0.0;  // max |F f(y)| / (c e^{R ||Im y||})
  std::size_t worst = 0;
  double c = 0.0;
  double radius = 0.0;
  bool ok = false;  // max_ratio <= 1 + 1e-6
};

/// |F f(y)| <= ||f||_{alpha,1} e^{R ||Im y||} with R the declared support radius.
BoundReport pw_bound_check(const SampledFunction& f, std::span<const SpectralPoint> points);

/// Type from the continuation of Phi_{l,alpha} to lambda = i s.
DirectionFit coefficient_type(const SampledFunction& f, const RealPolynomial& p,
                              const SphereGrid& sg, std::span<const double> s_grid);

/// Smallest singular value of the column-normalized matrix [Lambda(x_k, xi_m)].
/// Rejects duplicate points and fewer spectral samples than points.
double kernel_independence(const AlphaParam& p, std::span<const Point> points,
                           std::span<const SpectralPoint> xi);
/// Same matrix without the distinctness check.
double kernel_sigma_min(const AlphaParam& p, std::span<const Point> points,
                        std::span<const SpectralPoint> xi);

/// Uniform random real spectral points in [-L, L]^d x [0, L].
std::vector<SpectralPoint> random_spectral_samples(const AlphaParam& p, int count, double extent,
                                                   unsigned seed);

}  // namespace weinstein
