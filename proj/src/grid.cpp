#include "weinstein/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "weinstein/errors.hpp"

namespace weinstein {

namespace {

GridAxis symmetric_axis(double extent, int count, AxisRule rule) {
  GridAxis axis{{}, {}, extent, rule};
  if (rule == AxisRule::kGaussLegendre) {
    Rule1D r = gauss_legendre(count, -extent, extent);
    axis.nodes = std::move(r.nodes);
    axis.weights = std::move(r.weights);
    return axis;
  }
  const double h = 2.0 * extent / (count - 1);
  for (int j = 0; j < count; ++j) {
    axis.nodes.push_back(-extent + j * h);
    axis.weights.push_back((j == 0 || j == count - 1) ? 0.5 * h : h);
  }
  return axis;
}

// (0, X]: the node at 0 is dropped; the weighted integrand vanishes there.
GridAxis radial_axis(double extent, int count, AxisRule rule, double weight_exponent) {
  GridAxis axis{{}, {}, extent, rule};
  if (rule == AxisRule::kGaussLegendre) {
    Rule1D r = gauss_legendre(count, 0.0, extent);
    axis.nodes = std::move(r.nodes);
    axis.weights = std::move(r.weights);
  } else {
    const double h = extent / count;
    for (int j = 1; j <= count; ++j) {
      axis.nodes.push_back(j * h);
      axis.weights.push_back(j == count ? 0.5 * h : h);
    }
  }
  for (std::size_t k = 0; k < axis.nodes.size(); ++k) {
    axis.weights[k] *= std::pow(axis.nodes[k], weight_exponent);
  }
  return axis;
}

}  // namespace

BoxGrid::BoxGrid(AlphaParam param, std::vector<GridAxis> axes)
    : param_(param), axes_(std::move(axes)) {
  if (static_cast<int>(axes_.size()) != param_.dims()) {
    throw ValidationError("grid needs d+1 = " + std::to_string(param_.dims()) + " axes, got " +
                          std::to_string(axes_.size()));
  }
  size_ = 1;
  for (std::size_t j = 0; j < axes_.size(); ++j) {
    const GridAxis& a = axes_[j];
    if (a.nodes.empty() || a.nodes.size() != a.weights.size()) {
      throw ValidationError("axis " + std::to_string(j) + ": node/weight arrays empty or mismatched");
    }
    for (std::size_t k = 0; k < a.nodes.size(); ++k) {
      if (!std::isfinite(a.nodes[k]) || !(a.weights[k] >= 0.0)) {
        throw ValidationError("axis " + std::to_string(j) + ": non-finite node or negative weight");
      }
      if (k > 0 && !(a.nodes[k] > a.nodes[k - 1])) {
        throw ValidationError("axis " + std::to_string(j) + ": nodes not strictly increasing");
      }
    }
    if (!(a.extent > 0.0)) throw ValidationError("axis extent must be positive");
    size_ *= a.nodes.size();
  }
  if (!(axes_.back().nodes.front() > 0.0)) {
    throw ValidationError("last-axis nodes must be strictly positive");
  }
}

std::vector<std::size_t> BoxGrid::unravel(std::size_t flat) const {
  std::vector<std::size_t> idx(axes_.size());
  for (std::size_t j = axes_.size(); j-- > 0;) {
    const std::size_t n = axes_[j].nodes.size();
    idx[j] = flat % n;
    flat /= n;
  }
  return idx;
}

void BoxGrid::point(std::size_t flat, std::span<double> out) const {
  for (std::size_t j = axes_.size(); j-- > 0;) {
    const std::size_t n = axes_[j].nodes.size();
    out[j] = axes_[j].nodes[flat % n];
    flat /= n;
  }
}

Point BoxGrid::point(std::size_t flat) const {
  Point x(axes_.size());
  point(flat, x);
  return x;
}

double BoxGrid::weight(std::size_t flat) const {
  double w = 1.0;
  for (std::size_t j = axes_.size(); j-- > 0;) {
    const std::size_t n = axes_[j].nodes.size();
    w *= axes_[j].weights[flat % n];
    flat /= n;
  }
  return w;
}

double BoxGrid::spacing() const {
  double h = 0.0;
  for (const auto& a : axes_) {
    for (std::size_t k = 1; k < a.nodes.size(); ++k) h = std::max(h, a.nodes[k] - a.nodes[k - 1]);
  }
  return h;
}

double BoxGrid::max_radius() const {
  double r2 = 0.0;
  for (const auto& a : axes_) {
    const double m = std::max(std::abs(a.nodes.front()), std::abs(a.nodes.back()));
    r2 += m * m;
  }
  return std::sqrt(r2);
}

bool BoxGrid::contains_ball(double r) const {
  for (const auto& a : axes_) {
    if (a.extent < r) return false;
  }
  return true;
}

GridPtr build_box_grid(const AlphaParam& p, std::span<const double> extents,
                       std::span<const int> counts, AxisRule rule) {
  const auto dims = static_cast<std::size_t>(p.dims());
  if (extents.size() != dims || counts.size() != dims) {
    throw ValidationError("build_box_grid: need d+1 extents and counts");
  }
  if (rule == AxisRule::kCustom) throw ValidationError("build_box_grid: choose a concrete rule");
  std::vector<GridAxis> axes;
  for (std::size_t j = 0; j < dims; ++j) {
    if (!(extents[j] > 0.0) || !std::isfinite(extents[j])) {
      throw ValidationError("build_box_grid: extents must be positive");
    }
    if (counts[j] < 8) throw ValidationError("build_box_grid: counts must be >= 8");
    axes.push_back(j + 1 < dims ? symmetric_axis(extents[j], counts[j], rule)
                                : radial_axis(extents[j], counts[j], rule, p.weight_exponent()));
  }
  return std::make_shared<const BoxGrid>(p, std::move(axes));
}

GridPtr build_box_grid(const AlphaParam& p, double extent, int count, AxisRule rule) {
  const std::vector<double> e(static_cast<std::size_t>(p.dims()), extent);
  const std::vector<int> c(static_cast<std::size_t>(p.dims()), count);
  return build_box_grid(p, e, c, rule);
}

void validate(const SampledFunction& f) {
  if (!f.grid) throw ValidationError("sampled function has no grid");
  if (f.values.size() != f.grid->size()) {
    throw ValidationError("sampled function: " + std::to_string(f.values.size()) +
                          " values for a grid of " + std::to_string(f.grid->size()) + " nodes");
  }
  if (f.support_radius) {
    const double r = *f.support_radius;
    if (!(r >= 0.0)) throw ValidationError("support radius must be nonnegative");
    Point x(static_cast<std::size_t>(f.grid->dims()));
    for (std::size_t k = 0; k < f.values.size(); ++k) {
      if (f.values[k] == Complex(0.0)) continue;
      f.grid->point(k, x);
      if (norm(x) > r) {
        throw ValidationError("sampled function nonzero outside declared support radius");
      }
    }
  }
}

SampledFunction sample(GridPtr grid, const SpatialFn& fn, std::string label,
                       std::optional<double> support_radius) {
  SampledFunction f{std::move(grid), {}, support_radius, std::move(label), fn};
  f.values.resize(f.grid->size());
  Point x(static_cast<std::size_t>(f.grid->dims()));
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    f.grid->point(k, x);
    if (support_radius && norm(x) > *support_radius) continue;
    f.values[k] = fn(x);
  }
  return f;
}

SampledFunction zero_function(GridPtr grid, std::string label) {
  SampledFunction f{std::move(grid), {}, 0.0, std::move(label),
                    [](std::span<const double>) { return Complex(0.0); }};
  f.values.assign(f.grid->size(), Complex(0.0));
  return f;
}

Complex integrate(const SampledFunction& f) {
  Complex sum = 0.0;
  for (std::size_t k = 0; k < f.values.size(); ++k) sum += f.grid->weight(k) * f.values[k];
  return sum;
}

double lp_norm(const SampledFunction& f, double p) {
  if (std::isnan(p) || p < 1.0) throw DomainError("lp_norm requires p in [1, inf]");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const Complex& v : f.values) m = std::max(m, std::abs(v));
    return m;
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    sum += f.grid->weight(k) * std::pow(std::abs(f.values[k]), p);
  }
  return std::pow(sum, 1.0 / p);
}

double norm(std::span<const double> x) {
  double r2 = 0.0;
  for (double c : x) r2 += c * c;
  return std::sqrt(r2);
}

double sup_relative_error(std::span<const Complex> f, std::span<const Complex> g) {
  if (f.size() != g.size()) throw ValidationError("sup_relative_error: size mismatch");
  double diff = 0.0, scale = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    diff = std::max(diff, std::abs(f[k] - g[k]));
    scale = std::max(scale, std::abs(g[k]));
  }
  if (scale == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / scale;
}

double SphereGrid::total_measure() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

SphereGrid build_sphere_grid(const AlphaParam& p, int resolution) {
  if (p.d() != 1) {
    throw ValidationError("build_sphere_grid: only d = 1 (half-circle) is supported");
  }
  if (resolution < 16) throw ValidationError("build_sphere_grid: resolution must be >= 16");
  // u = cos phi: sin^{2a+1} phi d phi = (1-u^2)^a du.
  const Rule1D rule = gauss_jacobi(resolution, p.alpha(), p.alpha());
  SphereGrid g{p, {}, {}};
  for (int k = resolution; k-- > 0;) {  // increasing phi
    const double u = rule.nodes[static_cast<std::size_t>(k)];
    g.coords.push_back(u);
    g.coords.push_back(std::sqrt((1.0 - u) * (1.0 + u)));
    g.weights.push_back(rule.weights[static_cast<std::size_t>(k)]);
  }
  return g;
}

}  // namespace weinstein
