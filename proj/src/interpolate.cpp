#include <algorithm>
#include <array>
#include <cmath>
#include <memory>

#include "weinstein/errors.hpp"
#include "weinstein/grid.hpp"

namespace weinstein {

namespace {

struct Stencil {
  std::size_t first = 0;  // index into the (possibly extended) node list
  std::array<double, 4> w{};
};

// Four-point Lagrange weights around t on strictly increasing nodes (size >= 4).
Stencil lagrange4(const std::vector<double>& nodes, double t) {
  const auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
  std::ptrdiff_t i = (it - nodes.begin()) - 2;
  i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(nodes.size()) - 4);
  Stencil s;
  s.first = static_cast<std::size_t>(i);
  for (int a = 0; a < 4; ++a) {
    double w = 1.0;
    const double xa = nodes[s.first + static_cast<std::size_t>(a)];
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      const double xb = nodes[s.first + static_cast<std::size_t>(b)];
      w *= (t - xb) / (xa - xb);
    }
    s.w[static_cast<std::size_t>(a)] = w;
  }
  return s;
}

class Interpolant {
 public:
  explicit Interpolant(const SampledFunction& f) : grid_(f.grid), values_(f.values) {
    validate(f);
    const int dims = grid_->dims();
    for (int j = 0; j < dims; ++j) {
      if (grid_->axis_size(j) < 4) throw ValidationError("interpolation needs >= 4 nodes per axis");
      axes_.push_back(grid_->axis(j).nodes);
    }
    // Even extension of the last axis: mirrored nodes map back to the same index.
    const auto& last = grid_->axis(dims - 1).nodes;
    std::vector<double> ext;
    for (std::size_t k = last.size(); k-- > 0;) {
      ext.push_back(-last[k]);
      mirror_.push_back(k);
    }
    for (std::size_t k = 0; k < last.size(); ++k) {
      ext.push_back(last[k]);
      mirror_.push_back(k);
    }
    axes_.back() = std::move(ext);
  }

  Complex operator()(std::span<const double> x) const {
    const auto dims = axes_.size();
    std::vector<Stencil> st(dims);
    for (std::size_t j = 0; j < dims; ++j) {
      const double t = (j + 1 == dims) ? std::abs(x[j]) : x[j];
      if (std::abs(t) > grid_->axis(static_cast<int>(j)).extent) return 0.0;
      st[j] = lagrange4(axes_[j], t);
    }
    // Sum over the 4^{d+1} stencil corners.
    Complex sum = 0.0;
    std::vector<int> c(dims, 0);
    while (true) {
      double w = 1.0;
      std::size_t flat = 0;
      for (std::size_t j = 0; j < dims; ++j) {
        const auto cj = static_cast<std::size_t>(c[j]);
        w *= st[j].w[cj];
        std::size_t idx = st[j].first + cj;
        if (j + 1 == dims) idx = mirror_[idx];
        flat = flat * grid_->axis_size(static_cast<int>(j)) + idx;
      }
      sum += w * values_[flat];
      std::size_t j = dims;
      while (j-- > 0) {
        if (++c[j] < 4) break;
        c[j] = 0;
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
    return sum;
  }

 private:
  GridPtr grid_;
  std::vector<Complex> values_;
  std::vector<std::vector<double>> axes_;
  std::vector<std::size_t> mirror_;
};

}  // namespace

SpatialFn interpolant(const SampledFunction& f) {
  auto ip = std::make_shared<const Interpolant>(f);
  return [ip](std::span<const double> x) { return (*ip)(x); };
}

SpatialFn evaluator(const SampledFunction& f) {
  if (!f.source) return interpolant(f);
  if (!f.support_radius) return f.source;
  return [fn = f.source, r = *f.support_radius](std::span<const double> x) {
    return norm(x) > r ? Complex(0.0) : fn(x);
  };
}

}  // namespace weinstein
