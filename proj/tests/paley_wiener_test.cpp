#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <random>

#include "weinstein/errors.hpp"
#include "weinstein/heat.hpp"
#include "weinstein/paley_wiener.hpp"
#include "weinstein/translation.hpp"

using namespace weinstein;

namespace {

using V = std::vector<double>;

SpatialFn bump(double radius, double eps) {
  return [=](std::span<const double> x) {
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    r2 /= radius * radius;
    return r2 < 1.0 ? Complex(std::exp(-eps / (1.0 - r2))) : Complex(0.0);
  };
}

SampledFunction sampled_bump(const AlphaParam& p, double radius = 1.0, int nodes = 48) {
  return sample(build_box_grid(p, radius, nodes, AxisRule::kGaussLegendre), bump(radius, 0.25), "bump", radius);
}

RealPolynomial one() { return RealPolynomial::constant(2, 1.0); }

RealPolynomial linear() {
  RealPolynomial q(2);
  q.add_term({1, 0}, 1.0);
  return q;
}

// x_1^2 - x_2^2 / (2 alpha + 2)
RealPolynomial quadratic(double a) {
  RealPolynomial q(2);
  q.add_term({2, 0}, 1.0);
  q.add_term({0, 2}, -1.0 / (2 * a + 2));
  return q;
}

}  // namespace

class PaleyWiener : public ::testing::TestWithParam<double> {};

TEST_P(PaleyWiener, AngularCoefficientOfRadialFunction) {
  const AlphaParam p(GetParam(), 1);
  const SphereGrid sg = build_sphere_grid(p, 32);
  const SpatialFn g = [](std::span<const double> x) { return Complex(std::exp(-(x[0] * x[0] + x[1] * x[1]))); };
  for (double lam : {0.3, 1.0, 2.2}) {
    const Complex c = angular_coefficient(g, one(), lam, sg);
    EXPECT_NEAR(std::abs(c - std::exp(-lam * lam) * sg.total_measure()), 0.0, 1e-14);
  }
  EXPECT_THROW(angular_coefficient(g, one(), 0.0, sg), DomainError);
}

TEST_P(PaleyWiener, AngularCoefficientsSeparateHarmonicDegrees) {
  const double a = GetParam();
  const AlphaParam p(a, 1);
  const SphereGrid sg = build_sphere_grid(p, 32);
  const RealPolynomial q = quadratic(a);
  ASSERT_TRUE(is_generalized_harmonic(q, a));
  // f = Q(x) e^{-|x|^2}: only the degree-2 coefficient survives.
  const SpatialFn f = [&](std::span<const double> x) {
    return evaluate(q, x) * std::exp(-(x[0] * x[0] + x[1] * x[1]));
  };
  double qq = 0.0;
  for (std::size_t k = 0; k < sg.size(); ++k) qq += sg.weights[k] * std::pow(evaluate(q, sg.direction(k)), 2);
  for (double lam : {0.5, 1.3}) {
    const double expect = lam * lam * std::exp(-lam * lam) * qq;
    EXPECT_NEAR(angular_coefficient(f, q, lam, sg).real(), expect, 1e-13);
    EXPECT_NEAR(std::abs(angular_coefficient(f, one(), lam, sg)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(angular_coefficient(f, linear(), lam, sg)), 0.0, 1e-14);
  }
}

TEST_P(PaleyWiener, SampledAngularCoefficientNeedsTheBall) {
  const AlphaParam p(GetParam(), 1);
  const SphereGrid sg = build_sphere_grid(p, 32);
  const SampledFunction f = sampled_bump(p);
  EXPECT_THROW(angular_coefficient(f, one(), 1.5, sg), ValidationError);
  const Complex c = angular_coefficient(f, one(), 0.5, sg);
  EXPECT_NEAR(c.real(), std::exp(-0.25 / 0.75) * sg.total_measure(), 1e-6);
}

TEST_P(PaleyWiener, SphericalCoefficientOfHeatKernel) {
  // F(E_t)(z) = e^{-t <z, z>}, entire in z.
  const double t = 0.4;
  const AlphaParam p(GetParam(), 1);
  const SphereGrid sg = build_sphere_grid(p, 32);
  const SampledFunction e = sample(build_box_grid(p, V{7.0, 7.0}, std::vector<int>{64, 64}, AxisRule::kGaussLegendre),
                                   heat_kernel_fn(HeatParams(p, t)), "E_t");
  const SpectralFn exact = [t](std::span<const Complex> z) {
    Complex s = 0.0;
    for (const Complex& c : z) s += c * c;
    return std::exp(-t * s);
  };
  for (Complex lam : {Complex(0.8), Complex(2.0), Complex(0.0, 1.5), Complex(1.0, 0.7)}) {
    const Complex expect = std::exp(-t * lam * lam) * sg.total_measure() / lam;
    EXPECT_LT(std::abs(spherical_coefficient(exact, one(), lam, sg) - expect), 1e-13 * std::abs(expect));
    EXPECT_LT(std::abs(spherical_coefficient(e, one(), lam, sg) - expect), 1e-8 * std::abs(expect) + 1e-10);
  }
  EXPECT_THROW(spherical_coefficient(exact, one(), 0.0, sg), DomainError);
  // homogeneous normalization divides by lambda^l
  const Complex lam(1.2, 0.3);
  const Complex h = spherical_coefficient(exact, quadratic(GetParam()), lam, sg,
                                          CoefficientNormalization::kHomogeneous);
  const Complex pr = spherical_coefficient(exact, quadratic(GetParam()), lam, sg);
  EXPECT_LT(std::abs(h * lam * lam - pr * lam), 1e-14 * std::abs(pr * lam));
}

TEST_P(PaleyWiener, HankelTransformOfGaussian) {
  // Independent oracle: adaptive quadrature with Boost's J_nu.
  const double t = 0.3;
  for (double order : {GetParam(), GetParam() + 0.5}) {
    const RadialSamples s =
        sample_radial([t](double r) { return Complex(std::exp(-r * r / (4 * t))); }, 9.0, 96);
    const std::vector<Complex> lams{Complex(0.0), Complex(0.7), Complex(3.0)};
    const auto h = hankel_transform(order, s, lams);
    for (std::size_t k = 0; k < lams.size(); ++k) {
      const double l = lams[k].real();
      const auto integrand = [&](double r) {
        const double z = l * r;
        const double j = z < 1e-8 ? 1.0
                                  : boost::math::tgamma(order + 1) * std::pow(2.0 / z, order) *
                                        boost::math::cyl_bessel_j(order, z);
        return std::exp(-r * r / (4 * t)) * j * std::pow(r, 2 * order + 1);
      };
      const double oracle = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          integrand, 0.0, 12.0, 10, 1e-14);
      EXPECT_NEAR(h[k].real(), oracle, 1e-12 * std::max(1.0, std::abs(oracle)));
      const double closed = boost::math::tgamma(order + 1) * std::pow(2.0, 2 * order + 1) *
                            std::pow(t, order + 1) * std::exp(-t * l * l);
      EXPECT_NEAR(oracle, closed, 1e-12 * std::max(1.0, closed));
    }
  }
  EXPECT_THROW(hankel_transform(-0.6, RadialSamples{}, std::vector<Complex>{}), DomainError);
}

TEST_P(PaleyWiener, HankelReductionOfRadialCoefficient) {
  // Radial f: Phi_0(lambda) is a fixed multiple of the order alpha + d/2 Hankel transform.
  const double a = GetParam();
  const AlphaParam p(a, 1);
  const SphereGrid sg = build_sphere_grid(p, 32);
  const auto profile = [](double r) { return Complex(std::exp(-r * r) * (1.0 + r * r)); };
  const SampledFunction f = sample(build_box_grid(p, V{6.0, 6.0}, std::vector<int>{64, 64}, AxisRule::kGaussLegendre),
                                   [&](std::span<const double> x) { return profile(norm(x)); }, "radial");
  const std::vector<Complex> lams{0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5};
  const auto h = hankel_transform(a + 0.5, sample_radial(profile, 6.0, 80), lams);
  std::vector<Complex> phi;
  Complex hh = 0.0, hp = 0.0;
  for (std::size_t k = 0; k < lams.size(); ++k) {
    phi.push_back(spherical_coefficient(f, one(), lams[k], sg, CoefficientNormalization::kHomogeneous));
    hh += std::norm(h[k]);
    hp += std::conj(h[k]) * phi.back();
  }
  const Complex c = hp / hh;
  double res = 0.0, scale = 0.0;
  for (std::size_t k = 0; k < lams.size(); ++k) {
    res = std::max(res, std::abs(phi[k] - c * h[k]));
    scale = std::max(scale, std::abs(phi[k]));
  }
  EXPECT_LE(res / scale, 1e-6);
  EXPECT_NEAR(c.imag(), 0.0, 1e-8 * std::abs(c));
}

TEST(FitExponentialRate, RecoversSyntheticRates) {
  V s, g;
  for (int k = 0; k <= 16; ++k) {
    s.push_back(4.0 + k);
    g.push_back(3.0 * std::exp(1.7 * s.back()) * std::pow(s.back(), -2.5));
  }
  const DirectionFit fit = fit_exponential_rate(s, g);
  EXPECT_NEAR(fit.slope, 1.7, 1e-10);
  EXPECT_NEAR(fit.log_power, 2.5, 1e-9);
  for (double l : fit.local_slopes) EXPECT_NEAR(l, 1.7, 1e-9);
  EXPECT_THROW(fit_exponential_rate(V{1, 2, 3}, V{1, 2, 3}), ValidationError);
  g[12] = 0.0;
  EXPECT_THROW(fit_exponential_rate(s, g), NumericalQualityError);
}

TEST(DefaultDirections, UnitAndUpperHalf) {
  const AlphaParam p(0.5, 2);
  const auto dirs = default_directions(p, 8, 7);
  EXPECT_EQ(dirs.size(), 5u + 8u);
  for (const auto& u : dirs) {
    EXPECT_NEAR(norm(u), 1.0, 1e-14);
    EXPECT_GE(u.back(), 0.0);
  }
  EXPECT_EQ(default_directions(p, 8, 7), dirs);
}

TEST_P(PaleyWiener, BumpTypeMatchesSupportRadius) {
  const AlphaParam p(GetParam(), 1);
  const TypeEstimate e = estimate_exponential_type(sampled_bump(p));
  EXPECT_GE(e.r_hat, 0.85);
  EXPECT_LE(e.r_hat, 1.05);
  EXPECT_EQ(e.per_direction.size(), 3u + 8u);
  for (const auto& fit : e.per_direction) {
    double lo = INFINITY, hi = -INFINITY;
    for (double l : fit.local_slopes) {
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
    EXPECT_LE(hi - lo, 0.10 * fit.slope) << "direction (" << fit.u[0] << ", " << fit.u[1] << ")";
  }
}

TEST_P(PaleyWiener, TypeScalesWithDilation) {
  const AlphaParam p(GetParam(), 1);
  const double r1 = estimate_exponential_type(sampled_bump(p, 1.0)).r_hat;
  const double r2 = estimate_exponential_type(sampled_bump(p, 2.0, 64)).r_hat;
  EXPECT_NEAR(r2 / r1, 2.0, 0.10);
}

TEST_P(PaleyWiener, BoundHoldsOnRandomComplexPoints) {
  const AlphaParam p(GetParam(), 1);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> re(-6.0, 6.0), im(-5.6, 5.6);
  std::vector<SpectralPoint> pts;
  while (pts.size() < 200) {
    SpectralPoint z{Complex(re(rng), im(rng)), Complex(std::abs(re(rng)), im(rng))};
    if (imag_norm(z) <= 8.0) pts.push_back(z);
  }
  const BoundReport r = pw_bound_check(sampled_bump(p), pts);
  EXPECT_TRUE(r.ok) << r.max_ratio;
  EXPECT_LE(r.max_ratio, 1.0);
  EXPECT_DOUBLE_EQ(r.radius, 1.0);
}

TEST_P(PaleyWiener, TranslatedBumpStaysInsideGrownSupport) {
  const AlphaParam p(GetParam(), 1);
  const V x{0.6, 0.8};
  const GridPtr out = build_box_grid(p, 2.0, 64, AxisRule::kGaussLegendre);
  const SampledFunction tf = translate_angular(sampled_bump(p), x, out, 32);
  ASSERT_TRUE(tf.support_radius.has_value());
  EXPECT_LE(*tf.support_radius, 2.0 + 1e-12);
  TypeOptions opt;
  opt.s_grid.clear();
  for (int k = 0; k <= 16; ++k) opt.s_grid.push_back(4.0 + 0.75 * k);
  const TypeEstimate e = estimate_exponential_type(tf, opt);
  EXPECT_LE(e.r_hat, 2.1);
  EXPECT_GE(e.r_hat, 0.85);
}

TEST_P(PaleyWiener, CoefficientRouteAgreesWithDirectionalType) {
  const AlphaParam p(GetParam(), 1);
  const SampledFunction f = sampled_bump(p);
  const SphereGrid sg = build_sphere_grid(p, 32);
  const V s = default_s_grid();
  const double r_coef = coefficient_type(f, one(), sg, s).slope;
  const double r_dir = estimate_exponential_type(f).r_hat;
  EXPECT_NEAR(r_coef / r_dir, 1.0, 0.10);
}

TEST(ExponentialType, Preconditions) {
  const AlphaParam p(0.5, 1);
  const GridPtr g = build_box_grid(p, 1.0, 32, AxisRule::kGaussLegendre);
  SampledFunction f = sample(g, bump(1.0, 0.25), "bump");
  EXPECT_THROW(estimate_exponential_type(f), PreconditionError);
  f.support_radius = 1.0;
  TypeOptions opt;
  opt.s_grid = {4.0, 20.0, 40.0, 60.0, 70.0, 80.0, 90.0, 100.0};
  try {
    estimate_exponential_type(f, opt);
    ADD_FAILURE() << "expected RangeError";
  } catch (const RangeError& e) {
    EXPECT_NE(std::string(e.what()).find("suggested smax"), std::string::npos);
  }
  opt.s_grid = {4.0, 3.0, 5.0, 6.0};
  EXPECT_THROW(estimate_exponential_type(f, opt), ValidationError);
  opt.s_grid.clear();
  opt.directions = {{1.0, 1.0}};
  EXPECT_THROW(estimate_exponential_type(f, opt), ValidationError);
  EXPECT_NEAR(max_safe_s(f, std::vector<V>{{0.0, 1.0}}), 60.0 / g->axis(1).nodes.back(), 1e-12);
}

TEST_P(PaleyWiener, KernelIndependence) {
  const AlphaParam p(GetParam(), 1);
  const std::vector<Point> pts{{0.0, 0.5}, {0.7, 1.0}, {-0.4, 0.3}, {1.1, 1.6}, {-1.2, 0.9}};
  const auto xi = random_spectral_samples(p, 40, 4.0, 11);
  EXPECT_GT(kernel_independence(p, pts, xi), 1e-3);
  std::vector<Point> dup = pts;
  dup.push_back(pts[2]);
  EXPECT_LE(kernel_sigma_min(p, dup, xi), 1e-12);
  EXPECT_THROW(kernel_independence(p, dup, xi), ValidationError);
  EXPECT_THROW(kernel_independence(p, pts, std::span(xi).first(3)), ValidationError);
}

INSTANTIATE_TEST_SUITE_P(Alphas, PaleyWiener, ::testing::Values(0.0, 0.5, 1.5));
