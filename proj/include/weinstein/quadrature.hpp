#pragma once

#include <vector>

namespace weinstein {

/// One-dimensional quadrature rule: sum_k weights[k] * g(nodes[k]).
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight (1-u)^a (1+u)^b on [-1,1], a,b > -1.
/// Nodes are increasing. Golub-Welsch start, Newton polish on the orthonormal
/// recurrence, Christoffel weights.
Rule1D gauss_jacobi(int n, double a, double b);

/// Gauss-Legendre rule mapped to [lo, hi].
Rule1D gauss_legendre(int n, double lo, double hi);

/// Total mass of the Jacobi weight, 2^{a+b+1} B(a+1, b+1).
double jacobi_weight_mass(double a, double b);

}  // namespace weinstein
