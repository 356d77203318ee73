#include "weinstein/kernel.hpp"

#include <cmath>
#include <string>

#include "weinstein/errors.hpp"

namespace weinstein {

namespace {

void require_dims(const AlphaParam& p, std::size_t lam, std::size_t x) {
  const auto n = static_cast<std::size_t>(p.dims());
  if (lam != n || x != n) {
    throw ValidationError("kernel: lambda and x need d+1 = " + std::to_string(n) + " entries");
  }
}

}  // namespace

Complex weinstein_kernel(const NormalizedBessel& j, std::span<const Complex> lambda,
                         std::span<const double> x) {
  const std::size_t d = x.size() - 1;
  Complex phase = 0.0;
  for (std::size_t k = 0; k < d; ++k) phase += x[k] * lambda[k];
  return std::exp(Complex(0.0, -1.0) * phase) * j(x[d] * lambda[d]);
}

Complex weinstein_kernel(const AlphaParam& p, std::span<const Complex> lambda,
                         std::span<const double> x) {
  require_dims(p, lambda.size(), x.size());
  if (x.back() < 0.0) throw ValidationError("kernel: x_{d+1} must be >= 0");
  return weinstein_kernel(NormalizedBessel(p.alpha()), lambda, x);
}

std::vector<double> reflect(std::span<const double> x) {
  std::vector<double> r(x.begin(), x.end());
  for (std::size_t k = 0; k + 1 < r.size(); ++k) r[k] = -r[k];
  return r;
}

SpectralPoint reflect(std::span<const Complex> lambda) {
  SpectralPoint r(lambda.begin(), lambda.end());
  for (std::size_t k = 0; k + 1 < r.size(); ++k) r[k] = -r[k];
  return r;
}

double imag_norm(std::span<const Complex> lambda) {
  double s = 0.0;
  for (const Complex& z : lambda) s += z.imag() * z.imag();
  return std::sqrt(s);
}

double euclidean_norm(std::span<const double> x) {
  double s = 0.0;
  for (double c : x) s += c * c;
  return std::sqrt(s);
}

double kernel_growth_bound(std::span<const Complex> lambda, std::span<const double> x) {
  return std::exp(euclidean_norm(x) * imag_norm(lambda));
}

namespace {

// Tensor-product central difference of the kernel in the lambda components.
Complex finite_difference(const NormalizedBessel& j, std::span<const int> nu,
                          std::span<const Complex> lambda, std::span<const double> x, double h) {
  struct Tap {
    int offset;
    double coeff;
  };
  const std::vector<Tap> first{{-1, -0.5 / h}, {1, 0.5 / h}};
  const std::vector<Tap> second{{-1, 1.0 / (h * h)}, {0, -2.0 / (h * h)}, {1, 1.0 / (h * h)}};
  const std::vector<Tap> none{{0, 1.0}};

  std::vector<const std::vector<Tap>*> stencils;
  for (int order : nu) stencils.push_back(order == 0 ? &none : order == 1 ? &first : &second);

  Complex sum = 0.0;
  std::vector<std::size_t> idx(nu.size(), 0);
  SpectralPoint shifted(lambda.begin(), lambda.end());
  while (true) {
    double coeff = 1.0;
    for (std::size_t k = 0; k < nu.size(); ++k) {
      const Tap& t = (*stencils[k])[idx[k]];
      coeff *= t.coeff;
      shifted[k] = lambda[k] + t.offset * h;
    }
    sum += coeff * weinstein_kernel(j, shifted, x);
    std::size_t k = 0;
    while (k < nu.size() && ++idx[k] == stencils[k]->size()) idx[k++] = 0;
    if (k == nu.size()) break;
  }
  return sum;
}

}  // namespace

DerivativeBoundReport kernel_derivative_bound_check(const AlphaParam& p, std::span<const int> nu,
                                                    std::span<const Complex> lambda,
                                                    std::span<const double> x, double h) {
  require_dims(p, lambda.size(), x.size());
  if (nu.size() != lambda.size()) throw ValidationError("multi-index needs d+1 entries");
  int order = 0;
  for (int v : nu) {
    if (v < 0) throw ValidationError("multi-index entries must be nonnegative");
    order += v;
  }
  if (order > 2) throw ValidationError("derivative bound check supports |nu| <= 2");
  if (!(h > 0.0) || !std::isfinite(h)) throw ValidationError("step h must be positive");

  double lam_scale = 0.0;
  for (const Complex& z : lambda) lam_scale = std::max(lam_scale, std::abs(z));
  const NormalizedBessel j(p.alpha(),
                           std::max(kBesselWorkingRange, 1.01 * x.back() * (lam_scale + h)));

  const Complex coarse = finite_difference(j, nu, lambda, x, h);
  const Complex fine = finite_difference(j, nu, lambda, x, 0.5 * h);

  DerivativeBoundReport r;
  r.lhs = std::abs(fine);
  r.rhs = std::pow(euclidean_norm(x), order) * kernel_growth_bound(lambda, x);
  r.discrepancy = std::abs(coarse - fine);
  if (!(r.discrepancy <= 0.05 * r.rhs)) {
    throw NumericalQualityError("finite-difference step h = " + std::to_string(h) +
                                " unreliable: steps h and h/2 differ by " +
                                std::to_string(r.discrepancy) + " against bound " +
                                std::to_string(r.rhs));
  }
  r.ok = r.lhs <= r.rhs * 1.05;
  return r;
}

}  // namespace weinstein
