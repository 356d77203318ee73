#pragma once

#include <complex>

#include "weinstein/quadrature.hpp"

namespace weinstein {

using Complex = std::complex<double>;

/// Largest |z| accepted by the normalized Bessel evaluators.
inline constexpr double kBesselWorkingRange = 60.0;

/// Bessel index alpha (> -1/2) and the number d (>= 1) of Euclidean variables
/// preceding the radial one. Every measure, kernel and constant depends on it.
class AlphaParam {
 public:
  AlphaParam(double alpha, int d);

  double alpha() const { return alpha_; }
  int d() const { return d_; }
  /// Number of coordinates, d + 1.
  int dims() const { return d_ + 1; }
  /// Exponent 2*alpha + 1 of the radial weight.
  double weight_exponent() const { return 2.0 * alpha_ + 1.0; }

  friend bool operator==(const AlphaParam&, const AlphaParam&) = default;

 private:
  double alpha_;
  int d_;
};

/// Throws DomainError unless alpha > -1/2.
void require_alpha(double alpha);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// C_{alpha,d} = 1 / ((2 pi)^d 2^{2 alpha} Gamma(alpha+1)^2), evaluated in log space.
double inversion_constant(const AlphaParam& p);

/// Gamma(alpha+1) / (sqrt(pi) Gamma(alpha+1/2)), the reciprocal of
/// int_0^pi sin^{2 alpha}(theta) d theta.
double translation_constant(double alpha);

/// Power series Gamma(a+1) sum_k (-1)^k (z/2)^{2k} / (k! Gamma(a+k+1)) with
/// compensated summation. Accurate where |z| is small; cancels for large real z.
Complex bessel_j_series(double alpha, Complex z);

/// Normalized Bessel function j_alpha, bound to one index. For |z| > 4 it
/// evaluates the Poisson integral c_alpha int_{-1}^{1} cos(z u)(1-u^2)^{alpha-1/2} du
/// with a Gauss-Jacobi rule sized for |z| <= max_argument. Construct once and reuse.
class NormalizedBessel {
 public:
  explicit NormalizedBessel(double alpha, double max_argument = kBesselWorkingRange);

  double alpha() const { return alpha_; }
  double max_argument() const { return max_argument_; }
  Complex operator()(Complex z) const;
  double operator()(double x) const;

 private:
  double alpha_;
  double max_argument_;
  double prefactor_;
  Rule1D half_rule_;  // nonnegative nodes of the symmetric rule, weights doubled off-centre
};

/// j_alpha(z). Convenience wrapper; builds a NormalizedBessel per call.
Complex bessel_j_normalized(double alpha, Complex z);

}  // namespace weinstein
