#pragma once

#include <span>
#include <vector>

#include "weinstein/special_functions.hpp"

namespace weinstein {

/// Spectral variable lambda = (lambda', lambda_{d+1}) in C^{d+1}.
using SpectralPoint = std::vector<Complex>;

/// Lambda_alpha^d(lambda, x) = exp(-i <x', lambda'>) j_alpha(x_{d+1} lambda_{d+1}).
Complex weinstein_kernel(const NormalizedBessel& j, std::span<const Complex> lambda,
                         std::span<const double> x);
Complex weinstein_kernel(const AlphaParam& p, std::span<const Complex> lambda,
                         std::span<const double> x);

/// (-x', x_{d+1}); the reflection used throughout (last variable is radial).
std::vector<double> reflect(std::span<const double> x);
SpectralPoint reflect(std::span<const Complex> lambda);

/// Euclidean norm of the vector of imaginary parts.
double imag_norm(std::span<const Complex> lambda);
double euclidean_norm(std::span<const double> x);

/// exp(||x|| ||Im lambda||), the growth bound of the kernel.
double kernel_growth_bound(std::span<const Complex> lambda, std::span<const double> x);

struct DerivativeBoundReport {
  double lhs = 0.0;          // |D^nu Lambda| from the finer step
  double rhs = 0.0;          // ||x||^{|nu|} exp(||x|| ||Im lambda||)
  double discrepancy = 0.0;  // |D_h - D_{h/2}|, the step-quality estimate
  bool ok = false;           // lhs <= rhs * 1.05
};

/// Central finite differences of Lambda in the lambda components (|nu| <= 2)
/// compared against ||x||^{|nu|} e^{||x|| ||Im lambda||}. Throws
/// NumericalQualityError when steps h and h/2 disagree by more than 5% of rhs.
DerivativeBoundReport kernel_derivative_bound_check(const AlphaParam& p, std::span<const int> nu,
                                                    std::span<const Complex> lambda,
                                                    std::span<const double> x, double h);

}  // namespace weinstein
