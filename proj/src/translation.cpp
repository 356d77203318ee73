#include "weinstein/translation.hpp"

#include <algorithm>
#include <cmath>

#include "weinstein/errors.hpp"
#include "weinstein/quadrature.hpp"

namespace weinstein {

namespace {

void require_point(const AlphaParam& p, std::span<const double> x, const char* what) {
  if (static_cast<int>(x.size()) != p.dims()) {
    throw ValidationError(std::string(what) + " needs d+1 coordinates");
  }
  for (double c : x) {
    if (!std::isfinite(c)) throw ValidationError(std::string(what) + " has a non-finite entry");
  }
  if (x.back() < 0.0) throw ValidationError(std::string(what) + " must satisfy x_{d+1} >= 0");
}

// Angular average with a prebuilt rule; y_first is added to x' (pass -y' for tau_x f(-y)).
Complex average(const SpatialFn& f, const AngularRule& rule, std::span<const double> x,
                std::span<const double> y, std::vector<double>& buf) {
  const std::size_t last = x.size() - 1;
  for (std::size_t j = 0; j < last; ++j) buf[j] = x[j] + y[j];
  const double a = x[last], b = y[last];
  const double s = a * a + b * b;
  Complex sum = 0.0;
  for (std::size_t k = 0; k < rule.u.size(); ++k) {
    buf[last] = std::sqrt(std::max(0.0, s + 2.0 * a * b * rule.u[k]));
    sum += rule.w[k] * f(buf);
  }
  return sum;
}

}  // namespace

AngularRule angular_rule(double alpha, int nodes) {
  require_alpha(alpha);
  if (nodes < 16) throw ValidationError("angular rule needs at least 16 nodes");
  Rule1D r = gauss_jacobi(nodes, alpha - 0.5, alpha - 0.5);
  double total = 0.0;
  for (double w : r.weights) total += w;
  for (double& w : r.weights) w /= total;
  return {std::move(r.nodes), std::move(r.weights)};
}

Complex translate_angular(const SpatialFn& f, std::span<const double> x, std::span<const double> y,
                          const AlphaParam& p, int nodes) {
  require_point(p, x, "translation point x");
  require_point(p, y, "evaluation point y");
  const AngularRule rule = angular_rule(p.alpha(), nodes);
  std::vector<double> buf(x.size());
  return average(f, rule, x, y, buf);
}

SampledFunction translate_angular(const SampledFunction& f, std::span<const double> x, GridPtr out,
                                  int nodes) {
  validate(f);
  const AlphaParam& p = f.param();
  require_point(p, x, "translation point x");
  if (!out) out = f.grid;
  if (!(out->param() == p)) throw ValidationError("output grid has a different (alpha, d)");
  const AngularRule rule = angular_rule(p.alpha(), nodes);
  const SpatialFn fn = evaluator(f);

  SampledFunction r{out, std::vector<Complex>(out->size()), std::nullopt,
                    "tau[" + f.label + "]", {}};
  std::vector<double> y(x.size()), buf(x.size());
  // Every node is computed; the grown radius is declared only if the values bear it out.
  bool inside = f.support_radius.has_value();
  const double grown = f.support_radius.value_or(0.0) + norm(x);
  for (std::size_t k = 0; k < out->size(); ++k) {
    out->point(k, y);
    r.values[k] = average(fn, rule, x, y, buf);
    if (r.values[k] != Complex(0.0) && norm(y) > grown) inside = false;
  }
  if (inside) r.support_radius = grown;
  return r;
}

Complex translation_multiplier(const NormalizedBessel& j, std::span<const double> x,
                               std::span<const double> z) {
  double phase = 0.0;
  const std::size_t last = x.size() - 1;
  for (std::size_t i = 0; i < last; ++i) phase += x[i] * z[i];
  return Complex(std::cos(phase), std::sin(phase)) * j(x[last] * z[last]);
}

SpectralTranslation translate_spectral(const SampledFunction& f, std::span<const double> x,
                                       GridPtr spectral, GridPtr out, double tail_tolerance) {
  validate(f);
  const AlphaParam& p = f.param();
  require_point(p, x, "translation point x");
  if (!spectral) spectral = default_spectral_grid(*f.grid);
  if (!out) out = f.grid;

  SampledFunction ff = forward(f, spectral);
  const int dims = p.dims();
  const double reach = x.back() * spectral->axis(dims - 1).extent;
  const NormalizedBessel j(p.alpha(), std::max(kBesselWorkingRange, 1.0001 * reach));

  double total = 0.0, tail = 0.0;
  std::vector<double> z(x.size());
  for (std::size_t k = 0; k < spectral->size(); ++k) {
    spectral->point(k, z);
    const double e = spectral->weight(k) * std::norm(ff.values[k]);
    total += e;
    bool outer = false;
    for (int i = 0; i < dims; ++i) {
      outer = outer || std::abs(z[static_cast<std::size_t>(i)]) > 0.8 * spectral->axis(i).extent;
    }
    if (outer) tail += e;
    ff.values[k] *= translation_multiplier(j, x, z);
  }

  SpectralTranslation r{inverse(ff, out), total > 0.0 ? tail / total : 0.0, std::nullopt};
  r.result.label = "tau[" + f.label + "]";
  if (r.tail_fraction > tail_tolerance) {
    r.warning = "spectral truncation: tail energy fraction " + std::to_string(r.tail_fraction) +
                " exceeds " + std::to_string(tail_tolerance) + "; enlarge the spectral grid";
  }
  return r;
}

double effective_support(const SampledFunction& f) {
  validate(f);
  if (f.support_radius) return *f.support_radius;
  double peak = 0.0;
  for (const Complex& v : f.values) peak = std::max(peak, std::abs(v));
  double r = 0.0;
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    if (std::abs(f.values[k]) > 1e-14 * peak) r = std::max(r, norm(f.grid->point(k)));
  }
  return r;
}

NormCheck translation_norm_check(const SampledFunction& f, std::span<const double> x, double p,
                                 int nodes) {
  if (std::isnan(p) || p < 1.0) throw DomainError("norm exponent must lie in [1, inf]");
  const double reach = effective_support(f) + norm(x);
  if (!f.grid->contains_ball(reach)) {
    throw ValidationError("grid too small for the translated support (radius " +
                          std::to_string(reach) + ")");
  }
  const SampledFunction t = translate_angular(f, x, f.grid, nodes);
  NormCheck c{lp_norm(t, p), lp_norm(f, p), false};
  c.ok = c.lhs <= c.rhs * (1.0 + 1e-6);
  return c;
}

double translation_modulus(const SampledFunction& f, std::span<const double> x, double p,
                           int nodes) {
  if (!f.support_radius) {
    throw PreconditionError("translation modulus needs a declared support radius");
  }
  const double reach = *f.support_radius + norm(x);
  if (!f.grid->contains_ball(reach)) {
    throw ValidationError("grid too small for the translated support (radius " +
                          std::to_string(reach) + ")");
  }
  SampledFunction t = translate_angular(f, x, f.grid, nodes);
  t.support_radius.reset();
  for (std::size_t k = 0; k < t.values.size(); ++k) t.values[k] -= f.values[k];
  return lp_norm(t, p);
}

std::vector<Complex> convolve_direct_at(const SampledFunction& f, const SampledFunction& g,
                                        std::span<const Point> points, int angular_nodes) {
  validate(f);
  validate(g);
  if (!(f.param() == g.param())) throw ValidationError("convolution of different (alpha, d)");
  const AlphaParam& p = f.param();
  const AngularRule rule = angular_rule(p.alpha(), angular_nodes);
  const SpatialFn fn = evaluator(f);
  const BoxGrid& gy = *g.grid;
  const std::size_t dims = static_cast<std::size_t>(p.dims());

  // Reflected nodes -y = (-y', y_{d+1}) and weights, skipping zeros of g.
  std::vector<double> ys;
  std::vector<Complex> gw;
  std::vector<double> y(dims);
  for (std::size_t k = 0; k < gy.size(); ++k) {
    if (g.values[k] == Complex(0.0)) continue;
    gy.point(k, y);
    for (std::size_t j = 0; j + 1 < dims; ++j) y[j] = -y[j];
    ys.insert(ys.end(), y.begin(), y.end());
    gw.push_back(g.values[k] * gy.weight(k));
  }

  std::vector<Complex> out(points.size());
  std::vector<double> buf(dims);
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_point(p, points[i], "evaluation point");
    Complex sum = 0.0;
    for (std::size_t k = 0; k < gw.size(); ++k) {
      sum += gw[k] * average(fn, rule, points[i], std::span<const double>(ys.data() + k * dims, dims), buf);
    }
    out[i] = sum;
  }
  return out;
}

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g,
                         ConvolutionMethod method, const ConvolutionOptions& opt) {
  validate(f);
  validate(g);
  if (!(f.param() == g.param())) throw ValidationError("convolution of different (alpha, d)");
  const GridPtr out = opt.output ? opt.output : f.grid;
  const std::string label = f.label + "*" + g.label;

  if (method == ConvolutionMethod::kDirect) {
    std::vector<Point> pts(out->size());
    for (std::size_t k = 0; k < out->size(); ++k) pts[k] = out->point(k);
    return {out, convolve_direct_at(f, g, pts, opt.angular_nodes), std::nullopt, label, {}};
  }

  const GridPtr spectral = opt.spectral ? opt.spectral : default_spectral_grid(*f.grid);
  SampledFunction ff = forward(f, spectral, opt.mode);
  const SampledFunction fg = forward(g, spectral, opt.mode);
  for (std::size_t k = 0; k < ff.values.size(); ++k) ff.values[k] *= fg.values[k];
  SampledFunction r = inverse(ff, out, opt.mode);
  r.label = label;
  return r;
}

}  // namespace weinstein
