#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <gtest/gtest.h>

#include "weinstein/errors.hpp"
#include "weinstein/special_functions.hpp"

namespace weinstein {
namespace {

using std::numbers::pi;

// Independent oracles: Boost's J_nu / I_nu rescaled to the normalized function.
double boost_j(double alpha, double x) {
  if (x == 0.0) return 1.0;
  return std::tgamma(alpha + 1.0) * std::pow(2.0 / x, alpha) * boost::math::cyl_bessel_j(alpha, x);
}
double boost_j_imag(double alpha, double y) {
  return std::tgamma(alpha + 1.0) * std::pow(2.0 / y, alpha) * boost::math::cyl_bessel_i(alpha, y);
}

// Series in 50-digit complex arithmetic; cancellation is harmless at this precision.
Complex series_oracle(double alpha, Complex z) {
  using boost::multiprecision::cpp_complex_50;
  using boost::multiprecision::cpp_bin_float_50;
  const cpp_complex_50 zz(z.real(), z.imag());
  const cpp_complex_50 q = -zz * zz / 4;
  cpp_complex_50 term = 1, sum = 1;
  for (int k = 0; k < 400; ++k) {
    const cpp_bin_float_50 den = cpp_bin_float_50(k + 1) * (cpp_bin_float_50(alpha) + (k + 1));
    const cpp_complex_50 next = term * q;
    term = cpp_complex_50(next.real() / den, next.imag() / den);
    sum = sum + term;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

TEST(BesselJ, ValueAtZeroIsOne) {
  for (double a : {-0.4, 0.0, 0.5, 3.0}) EXPECT_EQ(bessel_j_normalized(a, 0.0), Complex(1.0));
}

TEST(BesselJ, HalfIndexClosedForm) {
  EXPECT_NEAR(std::abs(bessel_j_normalized(0.5, pi)), 0.0, 1e-15);
  const Complex v = bessel_j_normalized(0.5, Complex(0.0, pi));
  EXPECT_NEAR(v.real(), std::sinh(pi) / pi, 1e-13);
  EXPECT_NEAR(v.real(), 3.67608, 1e-5);
  EXPECT_NEAR(v.imag(), 0.0, 1e-14);
}

TEST(BesselJ, FirstZeroOfJ0) {
  // Bisection on the power series, independent of the angular-rule path.
  double lo = 2.0, hi = 3.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (bessel_j_series(0.0, mid).real() > 0.0 ? lo : hi) = mid;
  }
  EXPECT_NEAR(lo, 2.404825557695773, 1e-14);
  EXPECT_NEAR(bessel_j_normalized(0.0, 2.404825557695773).real(), 0.0, 1e-15);
}

TEST(BesselJ, MatchesBoostOnRealAxis) {
  const NormalizedBessel j0(0.0, 200.0);
  for (double a : {-0.4, 0.0, 0.5, 1.0, 2.5}) {
    const NormalizedBessel j(a, 200.0);
    for (double x = 0.05; x <= 200.0; x += 0.37) {
      EXPECT_NEAR(j(x), boost_j(a, x), 2e-14) << "alpha=" << a << " x=" << x;
    }
  }
}

TEST(BesselJ, MatchesBoostOnImaginaryAxis) {
  for (double a : {-0.4, 0.0, 0.5, 1.5}) {
    const NormalizedBessel j(a);
    for (double y = 0.1; y <= 60.0; y += 0.53) {
      const Complex v = j(Complex(0.0, y));
      EXPECT_NEAR(v.real() / boost_j_imag(a, y), 1.0, 1e-13) << "alpha=" << a << " y=" << y;
      EXPECT_GT(v.real(), 0.0);
    }
  }
}

TEST(BesselJ, MatchesHighPrecisionSeriesOffAxis) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-30.0, 30.0);
  for (double a : {-0.3, 0.0, 0.7, 1.5}) {
    const NormalizedBessel j(a);
    for (int i = 0; i < 40; ++i) {
      const Complex z(u(rng), u(rng));
      const Complex ref = series_oracle(a, z);
      // Rounding scale of the quadrature is e^{|Im z|}.
      EXPECT_LT(std::abs(j(z) - ref), 1e-13 * std::exp(std::abs(z.imag()))) << "z=" << z;
    }
  }
}

TEST(BesselJ, BoundedByOneOnRealAxis) {
  for (double a : {-0.4, 0.0, 0.5, 1.0, 2.5}) {
    const NormalizedBessel j(a);
    for (double x = -40.0; x <= 40.0; x += 0.01) EXPECT_LE(std::abs(j(x)), 1.0 + 1e-12);
  }
}

TEST(BesselJ, Even) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-40.0, 40.0);
  const NormalizedBessel j(0.8);
  for (int i = 0; i < 200; ++i) {
    const Complex z(u(rng), u(rng) * 0.5);
    const Complex a = j(z), b = j(-z);
    EXPECT_LE(std::abs(a - b), 1e-13 * std::max(1.0, std::abs(a)));
  }
}

TEST(BesselJ, SeriesReproducesSinc) {
  for (double x = 0.1; x <= 8.0; x += 0.1) {
    for (const Complex z : {Complex(x, 0.0), Complex(x, 0.5 * x), Complex(0.0, x)}) {
      const Complex ref = std::sin(z) / z;
      EXPECT_LE(std::abs(bessel_j_series(0.5, z) - ref), 1e-12 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST(BesselJ, RangeAndDomainErrors) {
  EXPECT_THROW(bessel_j_normalized(0.0, 61.0), RangeError);
  EXPECT_THROW(bessel_j_normalized(-0.5, 1.0), DomainError);
  EXPECT_THROW(bessel_j_normalized(-0.7, 1.0), DomainError);
  EXPECT_NO_THROW(NormalizedBessel(0.0, 120.0)(110.0));
}

TEST(LogGamma, Values) {
  EXPECT_DOUBLE_EQ(log_gamma(1.0), 0.0);
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(pi), 1e-15);
  EXPECT_NEAR(log_gamma(0.5), 0.5723649, 1e-7);
  EXPECT_NEAR(log_gamma(5.0), std::log(24.0), 1e-14);
  // Recurrence Gamma(x+1) = x Gamma(x) across (0, 50].
  for (double x = 0.01; x < 50.0; x += 0.731) {
    EXPECT_NEAR(log_gamma(x + 1.0) - log_gamma(x), std::log(x), 1e-12 * std::max(1.0, log_gamma(x + 1.0)));
  }
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-1.0), DomainError);
}

TEST(Constants, InversionConstant) {
  EXPECT_NEAR(inversion_constant({0.0, 1}), 1.0 / (2.0 * pi), 1e-15);
  EXPECT_NEAR(inversion_constant({0.0, 1}), 0.1591549, 1e-7);
  EXPECT_NEAR(inversion_constant({0.5, 1}), 1.0 / (pi * pi), 1e-15);
  EXPECT_NEAR(inversion_constant({0.0, 2}), 1.0 / (4.0 * pi * pi), 1e-15);
  EXPECT_GT(inversion_constant({60.0, 3}), 0.0);
}

TEST(Constants, TranslationConstant) {
  EXPECT_NEAR(translation_constant(0.5), 0.5, 1e-15);
  EXPECT_NEAR(translation_constant(0.0), 1.0 / pi, 1e-15);
  EXPECT_NEAR(translation_constant(1.0), 2.0 / pi, 1e-15);
  EXPECT_THROW(translation_constant(-0.5), DomainError);
}

TEST(Constants, TranslationConstantNormalizesSinePower) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  for (double a : {-0.4, -0.1, 0.0, 0.25, 0.5, 1.0, 2.5, 7.0}) {
    const double mass =
        2.0 * integrator.integrate([a](double t) { return std::pow(std::sin(t), 2.0 * a); }, 0.0, pi / 2);
    EXPECT_NEAR(translation_constant(a) * mass, 1.0, 1e-10) << "alpha=" << a;
  }
}

TEST(AlphaParamTest, Invariants) {
  EXPECT_THROW(AlphaParam(-0.5, 1), DomainError);
  EXPECT_THROW(AlphaParam(0.0, 0), DomainError);
  const AlphaParam p(0.5, 2);
  EXPECT_EQ(p.dims(), 3);
  EXPECT_DOUBLE_EQ(p.weight_exponent(), 2.0);
}

}  // namespace
}  // namespace weinstein
