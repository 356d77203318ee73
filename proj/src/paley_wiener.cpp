#include "weinstein/paley_wiener.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "weinstein/errors.hpp"
#include "weinstein/quadrature.hpp"

namespace weinstein {

namespace {

void require_lambda(Complex lambda) {
  if (lambda == Complex(0.0)) throw DomainError("coefficient undefined at lambda = 0");
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
    throw DomainError("lambda must be finite");
  }
}

Complex sphere_sum(const SphereGrid& sg, const RealPolynomial& p,
                   const std::function<Complex(std::size_t)>& value) {
  if (p.dims() != sg.param.dims()) throw ValidationError("polynomial and sphere dimensions differ");
  Complex s = 0.0;
  for (std::size_t k = 0; k < sg.size(); ++k) s += sg.weights[k] * evaluate(p, sg.direction(k)) * value(k);
  return s;
}

Complex normalization(const RealPolynomial& p, Complex lambda, CoefficientNormalization norm) {
  const int k = norm == CoefficientNormalization::kInverseLambda ? 1 : p.degree();
  return std::pow(lambda, -k);
}

}  // namespace

Complex angular_coefficient(const SpatialFn& f, const RealPolynomial& p, double lambda,
                            const SphereGrid& sg) {
  if (!(lambda > 0.0)) throw DomainError("angular coefficient needs lambda > 0");
  std::vector<double> x(static_cast<std::size_t>(sg.param.dims()));
  return sphere_sum(sg, p, [&](std::size_t k) {
    const auto t = sg.direction(k);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = lambda * t[j];
    return f(x);
  });
}

Complex angular_coefficient(const SampledFunction& f, const RealPolynomial& p, double lambda,
                            const SphereGrid& sg) {
  validate(f);
  if (!(f.param() == sg.param)) throw ValidationError("sphere grid has a different (alpha, d)");
  if (!f.grid->contains_ball(lambda)) {
    throw ValidationError("lambda t leaves the grid box (lambda = " + std::to_string(lambda) + ")");
  }
  return angular_coefficient(evaluator(f), p, lambda, sg);
}

Complex spherical_coefficient(const SpectralFn& ff, const RealPolynomial& p, Complex lambda,
                              const SphereGrid& sg, CoefficientNormalization norm) {
  require_lambda(lambda);
  std::vector<Complex> z(static_cast<std::size_t>(sg.param.dims()));
  const Complex s = sphere_sum(sg, p, [&](std::size_t k) {
    const auto t = sg.direction(k);
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = lambda * t[j];
    return ff(z);
  });
  return normalization(p, lambda, norm) * s;
}

Complex spherical_coefficient(const SampledFunction& f, const RealPolynomial& p, Complex lambda,
                              const SphereGrid& sg, CoefficientNormalization norm) {
  require_lambda(lambda);
  if (!(f.param() == sg.param)) throw ValidationError("sphere grid has a different (alpha, d)");
  std::vector<SpectralPoint> pts;
  for (std::size_t k = 0; k < sg.size(); ++k) {
    const auto t = sg.direction(k);
    SpectralPoint z;
    for (double c : t) z.push_back(lambda * c);
    pts.push_back(std::move(z));
  }
  const std::vector<Complex> ff = forward_at_points(f, pts);
  return normalization(p, lambda, norm) * sphere_sum(sg, p, [&](std::size_t k) { return ff[k]; });
}

RadialSamples sample_radial(const std::function<Complex(double)>& g, double r_max, int count) {
  if (!(r_max > 0.0)) throw ValidationError("radial extent must be positive");
  if (count < 8) throw ValidationError("radial sampling needs >= 8 nodes");
  Rule1D rule = gauss_legendre(count, 0.0, r_max);
  RadialSamples s{std::move(rule.nodes), std::move(rule.weights), {}};
  for (double r : s.r) s.g.push_back(g(r));
  return s;
}

std::vector<Complex> hankel_transform(double order, const RadialSamples& g,
                                      std::span<const Complex> lambdas) {
  if (!(order > -0.5)) throw DomainError("Hankel order must exceed -1/2");
  if (g.r.size() != g.w.size() || g.r.size() != g.g.size()) {
    throw ValidationError("radial samples: array lengths differ");
  }
  double r_max = 0.0, reach = 0.0;
  bool complex_arg = false;
  for (double r : g.r) r_max = std::max(r_max, r);
  for (const Complex& l : lambdas) {
    reach = std::max(reach, std::abs(l) * r_max);
    complex_arg = complex_arg || l.imag() != 0.0;
  }
  const NormalizedBessel j(order, complex_arg ? kBesselWorkingRange
                                              : std::max(kBesselWorkingRange, 1.0001 * reach));
  std::vector<Complex> out;
  for (const Complex& l : lambdas) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < g.r.size(); ++k) {
      s += g.w[k] * g.g[k] * j(l * g.r[k]) * std::pow(g.r[k], 2.0 * order + 1.0);
    }
    out.push_back(s);
  }
  return out;
}

std::vector<std::vector<double>> default_directions(const AlphaParam& p, int n_random,
                                                    unsigned seed) {
  const auto dims = static_cast<std::size_t>(p.dims());
  std::vector<std::vector<double>> dirs;
  for (std::size_t j = 0; j + 1 < dims; ++j) {
    for (double sgn : {1.0, -1.0}) {
      std::vector<double> u(dims, 0.0);
      u[j] = sgn;
      dirs.push_back(u);
    }
  }
  std::vector<double> up(dims, 0.0);
  up.back() = 1.0;
  dirs.push_back(up);
  std::mt19937 rng(seed);
  std::normal_distribution<double> n;
  for (int i = 0; i < n_random; ++i) {
    std::vector<double> u(dims);
    for (double& c : u) c = n(rng);
    u.back() = std::abs(u.back());
    const double r = norm(u);
    for (double& c : u) c /= r;
    dirs.push_back(u);
  }
  return dirs;
}

std::vector<double> default_s_grid() {
  std::vector<double> s;
  for (int k = 0; k <= 16; ++k) s.push_back(4.0 + k);
  return s;
}

DirectionFit fit_exponential_rate(std::span<const double> s, std::span<const double> g) {
  if (s.size() != g.size()) throw ValidationError("fit: s and g lengths differ");
  const std::size_t first = s.size() / 2;
  const auto m = static_cast<Eigen::Index>(s.size() - first);
  if (m < 4) throw ValidationError("fit window needs at least 4 points (s grid too short)");
  Eigen::MatrixXd a(m, 3);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const std::size_t k = first + static_cast<std::size_t>(i);
    if (!(g[k] > 0.0) || !std::isfinite(g[k])) {
      throw NumericalQualityError("|F f(i s u)| is zero or non-finite at s = " + std::to_string(s[k]));
    }
    a(i, 0) = s[k];
    a(i, 1) = -std::log(s[k]);
    a(i, 2) = 1.0;
    b(i) = std::log(g[k]);
  }
  const Eigen::Vector3d x = a.colPivHouseholderQr().solve(b);
  DirectionFit fit;
  fit.slope = x(0);
  fit.log_power = x(1);
  fit.residual = std::sqrt((a * x - b).squaredNorm() / static_cast<double>(m));
  for (std::size_t k = first; k + 1 < s.size(); ++k) {
    const double h0 = std::log(g[k]) + fit.log_power * std::log(s[k]);
    const double h1 = std::log(g[k + 1]) + fit.log_power * std::log(s[k + 1]);
    fit.local_slopes.push_back((h1 - h0) / (s[k + 1] - s[k]));
  }
  return fit;
}

double max_safe_s(const SampledFunction& f, std::span<const std::vector<double>> directions) {
  const BoxGrid& g = *f.grid;
  const int dims = g.dims();
  double safe = INFINITY;
  for (const auto& u : directions) {
    double phase = 0.0;
    for (int j = 0; j + 1 < dims; ++j) {
      const GridAxis& a = g.axis(j);
      phase += std::abs(u[static_cast<std::size_t>(j)]) *
               std::max(std::abs(a.nodes.front()), std::abs(a.nodes.back()));
    }
    const double radial = std::abs(u.back()) * g.axis(dims - 1).nodes.back();
    if (radial > 0.0) safe = std::min(safe, kBesselWorkingRange / radial);
    // e^{s (phase + radial)} must stay far from double overflow.
    if (phase + radial > 0.0) safe = std::min(safe, 600.0 / (phase + radial));
  }
  return safe;
}

TypeEstimate estimate_exponential_type(const SampledFunction& f, const TypeOptions& opt) {
  validate(f);
  if (!f.support_radius) {
    throw PreconditionError("exponential type needs a declared support radius (compact support)");
  }
  const AlphaParam& p = f.param();
  const auto dims = static_cast<std::size_t>(p.dims());
  const std::vector<std::vector<double>> dirs =
      opt.directions.empty() ? default_directions(p, opt.random_directions, opt.seed) : opt.directions;
  const std::vector<double> s = opt.s_grid.empty() ? default_s_grid() : opt.s_grid;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!(s[k] >= 1.0) || (k > 0 && !(s[k] > s[k - 1]))) {
      throw ValidationError("s grid must be increasing with s_min >= 1");
    }
  }
  for (const auto& u : dirs) {
    if (u.size() != dims) throw ValidationError("direction needs d+1 entries");
    if (std::abs(norm(u) - 1.0) > 1e-12) throw ValidationError("directions must be unit vectors");
  }
  const double safe = max_safe_s(f, dirs);
  if (s.back() > safe) {
    std::ostringstream msg;
    msg << "s_max = " << s.back() << " exceeds the Bessel working range for this grid; "
        << "suggested smax <= " << std::floor(safe * 100.0) / 100.0;
    throw RangeError(msg.str());
  }

  std::vector<SpectralPoint> pts;
  for (const auto& u : dirs) {
    for (double sv : s) {
      SpectralPoint z;
      for (double c : u) z.push_back(Complex(0.0, sv * c));
      pts.push_back(std::move(z));
    }
  }
  const std::vector<Complex> vals = forward_at_complex(f, pts);

  TypeEstimate est;
  est.s_min = s.front();
  est.s_max = s.back();
  est.c_used = lp_norm(f, 1.0);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    std::vector<double> g(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) g[k] = std::abs(vals[i * s.size() + k]);
    DirectionFit fit = fit_exponential_rate(s, g);
    fit.u = dirs[i];
    est.r_hat = std::max(est.r_hat, fit.slope);
    est.per_direction.push_back(std::move(fit));
  }
  return est;
}

BoundReport pw_bound_check(const SampledFunction& f, std::span<const SpectralPoint> points) {
  validate(f);
  if (!f.support_radius) throw PreconditionError("bound check needs a declared support radius");
  BoundReport r;
  r.c = lp_norm(f, 1.0);
  r.radius = *f.support_radius;
  const std::vector<Complex> vals = forward_at_complex(f, points);
  for (std::size_t k = 0; k < vals.size(); ++k) {
    const double bound = r.c * std::exp(r.radius * imag_norm(points[k]));
    const double ratio = bound > 0.0 ? std::abs(vals[k]) / bound : (vals[k] == Complex(0.0) ? 0.0 : INFINITY);
    if (ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.worst = k;
    }
  }
  r.ok = r.max_ratio <= 1.0 + 1e-6;
  return r;
}

DirectionFit coefficient_type(const SampledFunction& f, const RealPolynomial& p,
                              const SphereGrid& sg, std::span<const double> s_grid) {
  std::vector<double> g;
  for (double s : s_grid) {
    g.push_back(std::abs(spherical_coefficient(f, p, Complex(0.0, s), sg,
                                               CoefficientNormalization::kHomogeneous)));
  }
  return fit_exponential_rate(s_grid, g);
}

double kernel_sigma_min(const AlphaParam& p, std::span<const Point> points,
                        std::span<const SpectralPoint> xi) {
  if (points.empty()) throw ValidationError("kernel independence needs at least one point");
  const auto n = static_cast<Eigen::Index>(points.size());
  const auto m = static_cast<Eigen::Index>(xi.size());
  double reach = 0.0;
  for (const auto& x : points) {
    for (const auto& z : xi) reach = std::max(reach, x.back() * std::abs(z.back()));
  }
  const NormalizedBessel j(p.alpha(), std::max(kBesselWorkingRange, 1.0001 * reach));
  Eigen::MatrixXcd a(m, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Point& x = points[static_cast<std::size_t>(c)];
    if (static_cast<int>(x.size()) != p.dims() || x.back() < 0.0) {
      throw ValidationError("points must lie in R^{d+1}_+");
    }
    for (Eigen::Index r = 0; r < m; ++r) a(r, c) = weinstein_kernel(j, xi[static_cast<std::size_t>(r)], x);
    const double cn = a.col(c).norm();
    if (cn > 0.0) a.col(c) /= cn;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues().minCoeff();
}

double kernel_independence(const AlphaParam& p, std::span<const Point> points,
                           std::span<const SpectralPoint> xi) {
  if (xi.size() < points.size()) {
    throw ValidationError("need at least as many spectral samples as points");
  }
  std::set<Point> seen;
  for (const auto& x : points) {
    if (!seen.insert(x).second) throw ValidationError("duplicate point in kernel independence check");
  }
  return kernel_sigma_min(p, points, xi);
}

std::vector<SpectralPoint> random_spectral_samples(const AlphaParam& p, int count, double extent,
                                                   unsigned seed) {
  if (count < 1 || !(extent > 0.0)) throw ValidationError("need count >= 1 and extent > 0");
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-extent, extent);
  std::vector<SpectralPoint> out;
  for (int i = 0; i < count; ++i) {
    SpectralPoint z;
    for (int j = 0; j < p.dims(); ++j) z.push_back(u(rng));
    z.back() = std::abs(z.back().real());
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace weinstein
