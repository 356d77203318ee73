#include <gtest/gtest.h>

#include <boost/math/constants/constants.hpp>
#include <cmath>

#include "weinstein/errors.hpp"
#include "weinstein/heat.hpp"

using namespace weinstein;

namespace {
constexpr double pi = boost::math::constants::pi<double>();
using V = std::vector<double>;

double l1_distance(const SampledFunction& a, const SampledFunction& b) {
  SampledFunction d = a;
  d.support_radius.reset();
  for (std::size_t k = 0; k < d.values.size(); ++k) d.values[k] -= b.values[k];
  return lp_norm(d, 1.0);
}
}  // namespace

TEST(HeatKernel, ValueAtOriginAndDomain) {
  EXPECT_THROW(HeatParams(AlphaParam(0.0, 1), 0.0), DomainError);
  EXPECT_THROW(HeatParams(AlphaParam(0.0, 1), -1.0), DomainError);
  for (double a : {0.0, 0.5, 1.5}) {
    for (int d : {1, 2}) {
      const HeatParams h(AlphaParam(a, d), 0.3);
      const V zero(static_cast<std::size_t>(d + 1), 0.0);
      const double expect =
          2.0 / (std::pow(pi, d / 2.0) * std::tgamma(a + 1.0) * std::pow(1.2, a + 1.0 + d / 2.0));
      EXPECT_NEAR(heat_kernel(h, zero), expect, 1e-14 * expect);
    }
  }
}

TEST(HeatKernel, UnitMass) {
  for (double a : {0.0, 0.5, 1.5}) {
    const HeatParams h(AlphaParam(a, 1), 0.25);
    const GridPtr g = build_box_grid(h.p, 7.0, 64, AxisRule::kGaussLegendre);
    EXPECT_NEAR(integrate(sample(g, heat_kernel_fn(h))).real(), 1.0, 1e-8) << "alpha=" << a;
  }
  const HeatParams h(AlphaParam(0.5, 2), 0.25);
  const GridPtr g = build_box_grid(h.p, 7.0, 40, AxisRule::kGaussLegendre);
  EXPECT_NEAR(integrate(sample(g, heat_kernel_fn(h))).real(), 1.0, 1e-8);
}

TEST(HeatKernel, TransformIsGaussianMultiplier) {
  const HeatParams h(AlphaParam(1.5, 1), 0.4);
  const GridPtr xg = build_box_grid(h.p, 9.0, 96, AxisRule::kGaussLegendre);
  const GridPtr lg = build_box_grid(h.p, 10.0, 48, AxisRule::kGaussLegendre);
  const SampledFunction fe = forward(sample(xg, heat_kernel_fn(h)), lg);
  std::vector<Complex> expect(lg->size());
  for (std::size_t k = 0; k < lg->size(); ++k) {
    const Point l = lg->point(k);
    expect[k] = std::exp(-h.t * (l[0] * l[0] + l[1] * l[1]));
  }
  EXPECT_LE(sup_relative_error(fe.values, expect), 1e-7);
}

class HeatEvolve : public ::testing::TestWithParam<double> {};

TEST_P(HeatEvolve, Semigroup) {
  const AlphaParam p(GetParam(), 1);
  const GridPtr xg = build_box_grid(p, 8.0, 96, AxisRule::kGaussLegendre);
  const GridPtr lg = build_box_grid(p, 12.0, 96, AxisRule::kGaussLegendre);
  const SampledFunction es = sample(xg, heat_kernel_fn(HeatParams(p, 0.25)));
  const SampledFunction e2 = sample(xg, heat_kernel_fn(HeatParams(p, 0.5)));
  const SampledFunction ev = heat_evolve(es, 0.25, lg);
  EXPECT_LE(sup_relative_error(ev.values, e2.values), 1e-6);
  EXPECT_NEAR(integrate(ev).real(), integrate(es).real(), 1e-8);
  EXPECT_LE(lp_norm(ev, 1.0), lp_norm(es, 1.0) * (1.0 + 1e-6));
}

TEST_P(HeatEvolve, ApproximateIdentity) {
  const AlphaParam p(GetParam(), 1);
  const GridPtr xg = build_box_grid(p, 8.0, 96, AxisRule::kGaussLegendre);
  const GridPtr lg = build_box_grid(p, 14.0, 96, AxisRule::kGaussLegendre);
  const SampledFunction f = sample(xg, [](std::span<const double> x) {
    return Complex(std::exp(-(x[0] * x[0] + x[1] * x[1])) * (1.0 + 0.5 * x[0]));
  });
  double prev = INFINITY, first = 0.0;
  for (double t : {0.1, 0.05, 0.025, 0.0125}) {
    const double err = l1_distance(heat_evolve(f, t, lg), f);
    EXPECT_LT(err, prev) << "t=" << t;
    if (first == 0.0) first = err;
    prev = err;
  }
  // Smooth f: the error is O(t), so eight-fold smaller t gives roughly 1/8.
  EXPECT_LT(prev, 0.2 * first);
}

INSTANTIATE_TEST_SUITE_P(Alphas, HeatEvolve, ::testing::Values(0.0, 0.5, 1.5));

TEST(HeatEvolveMisc, ZeroAndDomain) {
  const AlphaParam p(0.5, 1);
  const GridPtr xg = build_box_grid(p, 4.0, 24, AxisRule::kGaussLegendre);
  const SampledFunction z = heat_evolve(zero_function(xg), 0.1);
  for (const auto& v : z.values) EXPECT_EQ(v, Complex(0.0));
  EXPECT_THROW(heat_evolve(zero_function(xg), 0.0), DomainError);
}

TEST(HeatResidual, SecondOrderConvergence) {
  const HeatParams h(AlphaParam(0.5, 1), 0.5);
  const V x{0.3, 0.7};
  const double scale = std::abs(heat_time_derivative(h, x, 1e-4));
  const double r1 = heat_equation_residual(h, x, 1e-3, 1e-3);
  const double r2 = heat_equation_residual(h, x, 5e-4, 5e-4);
  EXPECT_LE(r1, 1e-4 * scale);
  EXPECT_NEAR(r2 / r1, 0.25, 0.05);
  EXPECT_NEAR(heat_equation_residual(h, V{-0.3, 0.7}, 1e-3, 1e-3), r1, 1e-9 * scale);
}

TEST(HeatResidual, StencilErrors) {
  const HeatParams h(AlphaParam(0.5, 1), 0.5);
  EXPECT_THROW(heat_equation_residual(h, V{0.3, 0.003}, 1e-3, 1e-3), ValidationError);
  EXPECT_THROW(heat_equation_residual(h, V{0.3, 0.7}, 0.6, 1e-3), ValidationError);
}
