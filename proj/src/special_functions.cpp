#include "weinstein/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "weinstein/errors.hpp"

namespace weinstein {

namespace {

constexpr double kSeriesRadius = 4.0;

void require_in_range(Complex z, double max_argument) {
  if (!(std::abs(z) <= max_argument)) {
    throw RangeError("normalized Bessel argument |z| = " + std::to_string(std::abs(z)) +
                     " outside working range " + std::to_string(max_argument));
  }
}

// Even node count (no centre node, so the symmetric fold below is exact).
// Degree 2n-1 covers the Chebyshev tail of cos(z u) for |z| <= max_argument.
int angular_node_count(double max_argument) {
  int n = static_cast<int>(std::ceil(0.75 * max_argument)) + 40;
  return n + (n % 2);
}

}  // namespace

AlphaParam::AlphaParam(double alpha, int d) : alpha_(alpha), d_(d) {
  require_alpha(alpha);
  if (d < 1) throw DomainError("dimension d must be >= 1, got " + std::to_string(d));
}

void require_alpha(double alpha) {
  if (!(alpha > -0.5) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be > -1/2, got " + std::to_string(alpha));
  }
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  return boost::math::lgamma(x);
}

double inversion_constant(const AlphaParam& p) {
  const double log_c = -p.d() * std::log(2.0 * std::numbers::pi) -
                       2.0 * p.alpha() * std::numbers::ln2 - 2.0 * log_gamma(p.alpha() + 1.0);
  return std::exp(log_c);
}

double translation_constant(double alpha) {
  require_alpha(alpha);
  return std::exp(log_gamma(alpha + 1.0) - 0.5 * std::log(std::numbers::pi) -
                  log_gamma(alpha + 0.5));
}

Complex bessel_j_series(double alpha, Complex z) {
  require_alpha(alpha);
  require_in_range(z, kBesselWorkingRange);
  const Complex q = -0.25 * z * z;
  Complex sum = 1.0, comp = 0.0, term = 1.0;
  for (int k = 0; k < 2000; ++k) {
    term *= q / ((k + 1.0) * (alpha + k + 1.0));
    // Neumaier summation, component-wise.
    const Complex t = sum + term;
    auto fix = [](double s, double x, double tt) {
      return std::abs(s) >= std::abs(x) ? (s - tt) + x : (x - tt) + s;
    };
    comp += Complex(fix(sum.real(), term.real(), t.real()), fix(sum.imag(), term.imag(), t.imag()));
    sum = t;
    if (std::abs(term) < 1e-18 * std::abs(sum) && (k + 1.0) * (k + 1.0) > std::abs(q)) break;
  }
  return sum + comp;
}

NormalizedBessel::NormalizedBessel(double alpha, double max_argument)
    : alpha_(alpha), max_argument_(max_argument) {
  require_alpha(alpha);
  if (!(max_argument > 0.0) || !std::isfinite(max_argument)) {
    throw DomainError("NormalizedBessel: max_argument must be positive and finite");
  }
  prefactor_ = translation_constant(alpha);
  const int n = angular_node_count(max_argument);
  const Rule1D full = gauss_jacobi(n, alpha - 0.5, alpha - 0.5);
  // Fold the symmetric rule: cos(z u) is even in u.
  for (int i = 0; i < n; ++i) {
    const double u = full.nodes[i];
    if (u < 0.0) continue;
    half_rule_.nodes.push_back(u);
    half_rule_.weights.push_back(2.0 * full.weights[i] * prefactor_);
  }
}

Complex NormalizedBessel::operator()(Complex z) const {
  require_in_range(z, max_argument_);
  if (z.imag() == 0.0) return (*this)(z.real());
  if (std::abs(z) <= kSeriesRadius) return bessel_j_series(alpha_, z);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < half_rule_.nodes.size(); ++i) {
    sum += half_rule_.weights[i] * std::cos(z * half_rule_.nodes[i]);
  }
  return sum;
}

double NormalizedBessel::operator()(double x) const {
  require_in_range(x, max_argument_);
  if (std::abs(x) <= kSeriesRadius) return bessel_j_series(alpha_, x).real();
  double sum = 0.0;
  for (std::size_t i = 0; i < half_rule_.nodes.size(); ++i) {
    sum += half_rule_.weights[i] * std::cos(x * half_rule_.nodes[i]);
  }
  return sum;
}

Complex bessel_j_normalized(double alpha, Complex z) { return NormalizedBessel(alpha)(z); }

}  // namespace weinstein
