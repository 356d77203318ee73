#include "weinstein/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/gamma.hpp>

#include "weinstein/errors.hpp"

namespace weinstein {

namespace {

// Recurrence of the monic Jacobi polynomials: p_{k+1} = (x - diag_k) p_k - offdiag_k^2 p_{k-1}.
struct JacobiRecurrence {
  std::vector<double> diag;     // size n
  std::vector<double> offdiag;  // size n, offdiag[0] unused
};

JacobiRecurrence jacobi_recurrence(int n, double a, double b) {
  JacobiRecurrence rec{std::vector<double>(n), std::vector<double>(n, 0.0)};
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      rec.diag[0] = (b - a) / (ab + 2.0);
    } else {
      const double s = 2.0 * k + ab;
      rec.diag[k] = (b * b - a * a) / (s * (s + 2.0));
    }
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double beta2;
    if (k == 1) {
      // (k+a+b) cancels against (2k+a+b-1); this form stays finite at a+b=-1.
      beta2 = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta2 = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    rec.offdiag[k] = std::sqrt(beta2);
  }
  return rec;
}

}  // namespace

double jacobi_weight_mass(double a, double b) {
  using boost::math::lgamma;
  return std::exp((a + b + 1.0) * std::log(2.0) + lgamma(a + 1.0) + lgamma(b + 1.0) -
                  lgamma(a + b + 2.0));
}

Rule1D gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw ValidationError("gauss_jacobi: node count must be positive");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("gauss_jacobi: exponents must exceed -1");

  const auto rec = jacobi_recurrence(n, a, b);
  const double mass = jacobi_weight_mass(a, b);

  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) diag[k] = rec.diag[k];
  for (int k = 1; k < n; ++k) sub[k - 1] = rec.offdiag[k];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);

  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton polish and Christoffel sums in extended precision: near +-1 the weight
  // formula amplifies the rounding of the node itself.
  for (int i = 0; i < n; ++i) {
    long double x = solver.eigenvalues()[i];
    long double christoffel = 0.0L;
    for (int iter = 0; iter < 3; ++iter) {
      long double q_prev = 0.0L, q = 1.0L / std::sqrt(static_cast<long double>(mass));
      long double dq_prev = 0.0L, dq = 0.0L;
      christoffel = q * q;
      // Orthonormal recurrence: sqrt(b_{k+1}) q_{k+1} = (x - a_k) q_k - sqrt(b_k) q_{k-1}.
      for (int k = 0; k < n; ++k) {
        const long double bk1 = (k + 1 < n) ? rec.offdiag[k + 1] : 1.0L;
        const long double bk = rec.offdiag[k];
        const long double q_next = ((x - rec.diag[k]) * q - bk * q_prev) / bk1;
        const long double dq_next = (q + (x - rec.diag[k]) * dq - bk * dq_prev) / bk1;
        q_prev = q;
        q = q_next;
        dq_prev = dq;
        dq = dq_next;
        if (k + 1 < n) christoffel += q * q;
      }
      // The final q is proportional to p_n(x).
      if (dq != 0.0L) {
        const long double step = q / dq;
        if (std::abs(step) < 1e-6L) x -= step;
      }
    }
    rule.nodes[i] = static_cast<double>(x);
    rule.weights[i] = static_cast<double>(1.0L / christoffel);
  }
  // Renormalize total mass (absorbs last-bit drift in the Christoffel sums).
  double total = 0.0;
  for (double w : rule.weights) total += w;
  for (double& w : rule.weights) w *= mass / total;
  return rule;
}

Rule1D gauss_legendre(int n, double lo, double hi) {
  Rule1D rule = gauss_jacobi(n, 0.0, 0.0);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

}  // namespace weinstein
