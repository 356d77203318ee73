#include <cmath>

#include <gtest/gtest.h>

#include "weinstein/errors.hpp"
#include "weinstein/quadrature.hpp"

namespace weinstein {
namespace {

// int_{-1}^{1} u^{2k} (1-u^2)^c du = B(k+1/2, c+1)
double even_moment(int k, double c) {
  return std::exp(std::lgamma(k + 0.5) + std::lgamma(c + 1.0) - std::lgamma(k + c + 1.5));
}

TEST(GaussJacobi, SymmetricRuleIsExactOnEvenMoments) {
  for (double c : {-0.9, -0.5, 0.0, 0.5, 2.0}) {
    const Rule1D r = gauss_jacobi(20, c, c);
    for (int k = 0; k < 20; ++k) {
      double q = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) q += r.weights[i] * std::pow(r.nodes[i], 2 * k);
      EXPECT_NEAR(q, even_moment(k, c), 1e-13 * even_moment(0, c)) << "c=" << c << " k=" << k;
    }
  }
}

TEST(GaussJacobi, AsymmetricRuleIntegratesPolynomials) {
  // int_{-1}^1 (1-u)^a (1+u)^b u du = mass * (b-a)/(a+b+2)
  const double a = 0.3, b = -0.6;
  const Rule1D r = gauss_jacobi(12, a, b);
  double q0 = 0.0, q1 = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    q0 += r.weights[i];
    q1 += r.weights[i] * r.nodes[i];
  }
  EXPECT_NEAR(q0, jacobi_weight_mass(a, b), 1e-13);
  EXPECT_NEAR(q1, jacobi_weight_mass(a, b) * (b - a) / (a + b + 2.0), 1e-13);
}

TEST(GaussJacobi, NodesIncreaseAndStayInside) {
  const Rule1D r = gauss_jacobi(200, -0.5, -0.5);
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    EXPECT_GT(r.nodes[i], -1.0);
    EXPECT_LT(r.nodes[i], 1.0);
    EXPECT_GT(r.weights[i], 0.0);
    if (i > 0) EXPECT_GT(r.nodes[i], r.nodes[i - 1]);
  }
  // Chebyshev first kind: nodes cos((2k-1)pi/2n), weights pi/n.
  const double pi = std::acos(-1.0);
  for (int k = 1; k <= 200; ++k) {
    EXPECT_NEAR(r.nodes[static_cast<std::size_t>(200 - k)], std::cos((2 * k - 1) * pi / 400.0), 1e-14);
    EXPECT_NEAR(r.weights[static_cast<std::size_t>(k - 1)], pi / 200.0, 1e-14);
  }
}

TEST(GaussLegendre, MappedInterval) {
  const Rule1D r = gauss_legendre(16, 0.0, 3.0);
  double q = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) q += r.weights[i] * std::pow(r.nodes[i], 7);
  EXPECT_NEAR(q, std::pow(3.0, 8) / 8.0, 1e-10);
}

TEST(GaussJacobi, RejectsBadInput) {
  EXPECT_THROW(gauss_jacobi(0, 0.0, 0.0), ValidationError);
  EXPECT_THROW(gauss_jacobi(4, -1.0, 0.0), DomainError);
}

}  // namespace
}  // namespace weinstein
