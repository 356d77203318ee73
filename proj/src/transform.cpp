#include "weinstein/transform.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Core>

#include "weinstein/errors.hpp"

namespace weinstein {

namespace {

using RowMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void require_same_param(const BoxGrid& a, const BoxGrid& b) {
  if (!(a.param() == b.param())) {
    throw ValidationError("grids carry different (alpha, d); mixing parameters is not allowed");
  }
}

double max_abs_node(const GridAxis& a) {
  return std::max(std::abs(a.nodes.front()), std::abs(a.nodes.back()));
}

std::vector<Complex> weighted_values(const BoxGrid& grid, std::span<const Complex> values) {
  if (values.size() != grid.size()) throw ValidationError("value count does not match grid");
  std::vector<Complex> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out[k] = values[k] * grid.weight(k);
  return out;
}

}  // namespace

TransformPlan::TransformPlan(GridPtr input, GridPtr output, TransformMode mode)
    : input_(std::move(input)), output_(std::move(output)), mode_(mode) {
  if (!input_ || !output_) throw ValidationError("transform plan needs two grids");
  require_same_param(*input_, *output_);
  const int dims = input_->dims();
  const GridAxis& in_last = input_->axis(dims - 1);
  const GridAxis& out_last = output_->axis(dims - 1);
  const double reach = max_abs_node(in_last) * max_abs_node(out_last);
  const NormalizedBessel bessel(input_->param().alpha(),
                                std::max(kBesselWorkingRange, 1.0001 * reach));
  for (int j = 0; j < dims; ++j) {
    const GridAxis& a = input_->axis(j);
    const GridAxis& b = output_->axis(j);
    std::vector<Complex> table(a.nodes.size() * b.nodes.size());
    for (std::size_t m = 0; m < b.nodes.size(); ++m) {
      for (std::size_t n = 0; n < a.nodes.size(); ++n) {
        const double arg = b.nodes[m] * a.nodes[n];
        table[m * a.nodes.size() + n] =
            (j + 1 < dims) ? Complex(std::cos(arg), -std::sin(arg)) : Complex(bessel(arg), 0.0);
      }
    }
    tables_.push_back(std::move(table));
  }
}

std::vector<Complex> TransformPlan::apply(std::span<const Complex> values,
                                          TransformDirection dir) const {
  std::vector<Complex> weighted = weighted_values(*input_, values);
  std::vector<Complex> out = mode_ == TransformMode::kSeparable
                                 ? apply_separable(std::move(weighted), dir)
                                 : apply_direct(weighted, dir);
  if (dir == TransformDirection::kInverse) {
    const double c = inversion_constant(input_->param());
    for (Complex& v : out) v *= c;
  }
  return out;
}

std::vector<Complex> TransformPlan::apply_separable(std::vector<Complex> tensor,
                                                    TransformDirection dir) const {
  const int dims = input_->dims();
  std::vector<std::size_t> shape(static_cast<std::size_t>(dims));
  for (int j = 0; j < dims; ++j) shape[static_cast<std::size_t>(j)] = input_->axis_size(j);

  for (int j = 0; j < dims; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    const std::size_t n = shape[ju];
    const std::size_t m = output_->axis_size(j);
    std::size_t pre = 1, post = 1;
    for (std::size_t k = 0; k < ju; ++k) pre *= shape[k];
    for (std::size_t k = ju + 1; k < shape.size(); ++k) post *= shape[k];

    RowMatrix table = Eigen::Map<const RowMatrix>(tables_[ju].data(), static_cast<Eigen::Index>(m),
                                                  static_cast<Eigen::Index>(n));
    if (dir == TransformDirection::kInverse && j + 1 < dims) table = table.conjugate();

    std::vector<Complex> next(pre * m * post);
    for (std::size_t p = 0; p < pre; ++p) {
      Eigen::Map<const RowMatrix> in(tensor.data() + p * n * post, static_cast<Eigen::Index>(n),
                                     static_cast<Eigen::Index>(post));
      Eigen::Map<RowMatrix> out(next.data() + p * m * post, static_cast<Eigen::Index>(m),
                                static_cast<Eigen::Index>(post));
      out.noalias() = table * in;
    }
    tensor = std::move(next);
    shape[ju] = m;
  }
  return tensor;
}

std::vector<Complex> TransformPlan::apply_direct(const std::vector<Complex>& weighted,
                                                 TransformDirection dir) const {
  const auto dims = static_cast<std::size_t>(input_->dims());
  std::vector<std::size_t> in_shape(dims);
  for (std::size_t j = 0; j < dims; ++j) in_shape[j] = input_->axis_size(static_cast<int>(j));
  const bool conj_phase = dir == TransformDirection::kInverse;

  std::vector<Complex> out(output_->size());
  std::vector<std::size_t> in_idx(dims);
  for (std::size_t mflat = 0; mflat < out.size(); ++mflat) {
    const std::vector<std::size_t> out_idx = output_->unravel(mflat);
    std::vector<const Complex*> rows(dims);
    for (std::size_t j = 0; j < dims; ++j) rows[j] = tables_[j].data() + out_idx[j] * in_shape[j];

    Complex sum = 0.0;
    std::fill(in_idx.begin(), in_idx.end(), 0);
    for (std::size_t nflat = 0; nflat < weighted.size(); ++nflat) {
      Complex k = 1.0;
      for (std::size_t j = 0; j < dims; ++j) {
        const Complex t = rows[j][in_idx[j]];
        k *= (conj_phase && j + 1 < dims) ? std::conj(t) : t;
      }
      sum += k * weighted[nflat];
      for (std::size_t j = dims; j-- > 0;) {
        if (++in_idx[j] < in_shape[j]) break;
        in_idx[j] = 0;
      }
    }
    out[mflat] = sum;
  }
  return out;
}

GridPtr default_spectral_grid(const BoxGrid& spatial) {
  std::vector<double> extents;
  std::vector<int> counts;
  for (int j = 0; j < spatial.dims(); ++j) {
    const auto n = static_cast<int>(spatial.axis_size(j));
    counts.push_back(n);
    extents.push_back(n / (2.0 * spatial.axis(j).extent));
  }
  return build_box_grid(spatial.param(), extents, counts, AxisRule::kGaussLegendre);
}

SampledFunction forward(const SampledFunction& f, GridPtr spectral, TransformMode mode) {
  validate(f);
  const TransformPlan plan(f.grid, std::move(spectral), mode);
  return {plan.output(), plan.apply(f.values, TransformDirection::kForward), std::nullopt,
          "F[" + f.label + "]", {}};
}

SampledFunction inverse(const SampledFunction& g, GridPtr spatial, TransformMode mode) {
  validate(g);
  const TransformPlan plan(g.grid, std::move(spatial), mode);
  return {plan.output(), plan.apply(g.values, TransformDirection::kInverse), std::nullopt,
          "Finv[" + g.label + "]", {}};
}

namespace {

// sum_n w_n v_n prod_j factor_j(point_j, node_{j,n}) for one target point, where the
// per-axis factor vectors have already been evaluated.
Complex contract_point(const BoxGrid& grid, const std::vector<Complex>& weighted,
                       const std::vector<std::vector<Complex>>& factors) {
  const auto dims = static_cast<std::size_t>(grid.dims());
  // Reduce the last axis first, then the others from the back.
  std::vector<Complex> tensor = weighted;
  std::size_t len = tensor.size();
  for (std::size_t j = dims; j-- > 0;) {
    const std::size_t n = factors[j].size();
    const std::size_t outer = len / n;
    for (std::size_t o = 0; o < outer; ++o) {
      Complex s = 0.0;
      const Complex* row = tensor.data() + o * n;
      for (std::size_t k = 0; k < n; ++k) s += factors[j][k] * row[k];
      tensor[o] = s;
    }
    len = outer;
  }
  return tensor[0];
}

}  // namespace

std::vector<Complex> forward_at_points(const SampledFunction& f,
                                       std::span<const SpectralPoint> points) {
  validate(f);
  const BoxGrid& grid = *f.grid;
  const auto dims = static_cast<std::size_t>(grid.dims());
  const std::vector<Complex> weighted = weighted_values(grid, f.values);
  const double last_extent = max_abs_node(grid.axis(static_cast<int>(dims - 1)));

  double reach = 0.0;
  for (const auto& pt : points) {
    if (pt.size() != dims) throw ValidationError("spectral point needs d+1 entries");
    reach = std::max(reach, std::abs(pt.back()) * last_extent);
  }
  // Complex arguments stay within the documented range; real ones may go further.
  bool any_complex = false;
  for (const auto& pt : points) any_complex = any_complex || pt.back().imag() != 0.0;
  const double limit = any_complex ? kBesselWorkingRange : std::max(kBesselWorkingRange, reach);
  if (reach > limit) {
    throw RangeError("Bessel argument " + std::to_string(reach) + " exceeds working range " +
                     std::to_string(kBesselWorkingRange));
  }
  const NormalizedBessel bessel(grid.param().alpha(), std::max(kBesselWorkingRange, 1.0001 * reach));

  std::vector<Complex> out(points.size());
  std::vector<std::vector<Complex>> factors(dims);
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t j = 0; j < dims; ++j) {
      const GridAxis& a = grid.axis(static_cast<int>(j));
      factors[j].resize(a.nodes.size());
      for (std::size_t k = 0; k < a.nodes.size(); ++k) {
        factors[j][k] = j + 1 < dims ? std::exp(Complex(0.0, -1.0) * points[p][j] * a.nodes[k])
                                     : bessel(points[p][j] * a.nodes[k]);
      }
    }
    out[p] = contract_point(grid, weighted, factors);
  }
  return out;
}

std::vector<Complex> forward_at_complex(const SampledFunction& f,
                                        std::span<const SpectralPoint> points) {
  if (!f.support_radius) {
    throw PreconditionError(
        "complex extension requires a declared support radius (compact support)");
  }
  return forward_at_points(f, points);
}

std::vector<Complex> inverse_at_points(const SampledFunction& g, std::span<const Point> points) {
  validate(g);
  const BoxGrid& grid = *g.grid;
  const auto dims = static_cast<std::size_t>(grid.dims());
  const std::vector<Complex> weighted = weighted_values(grid, g.values);
  const double last_extent = max_abs_node(grid.axis(static_cast<int>(dims - 1)));
  double reach = 0.0;
  for (const auto& x : points) {
    if (x.size() != dims) throw ValidationError("point needs d+1 entries");
    if (x.back() < 0.0) throw ValidationError("points must lie in the half-space x_{d+1} >= 0");
    reach = std::max(reach, x.back() * last_extent);
  }
  const NormalizedBessel bessel(grid.param().alpha(), std::max(kBesselWorkingRange, 1.0001 * reach));
  const double c = inversion_constant(grid.param());

  std::vector<Complex> out(points.size());
  std::vector<std::vector<Complex>> factors(dims);
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t j = 0; j < dims; ++j) {
      const GridAxis& a = grid.axis(static_cast<int>(j));
      factors[j].resize(a.nodes.size());
      for (std::size_t k = 0; k < a.nodes.size(); ++k) {
        const double arg = points[p][j] * a.nodes[k];
        factors[j][k] = j + 1 < dims ? Complex(std::cos(arg), std::sin(arg)) : Complex(bessel(arg));
      }
    }
    out[p] = c * contract_point(grid, weighted, factors);
  }
  return out;
}

Complex inner_product(const SampledFunction& f, const SampledFunction& g) {
  if (f.grid != g.grid && !(f.grid->size() == g.grid->size())) {
    throw ValidationError("inner product needs a shared grid");
  }
  Complex s = 0.0;
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    s += f.grid->weight(k) * f.values[k] * std::conj(g.values[k]);
  }
  return s;
}

double plancherel_defect(const SampledFunction& f, GridPtr spectral, TransformMode mode) {
  const double norm2 = inner_product(f, f).real();
  if (!(norm2 > 0.0)) throw DomainError("Plancherel defect undefined for the zero function");
  const SampledFunction ff = forward(f, std::move(spectral), mode);
  const double c = inversion_constant(f.param());
  return std::abs(norm2 - c * inner_product(ff, ff).real()) / norm2;
}

double parseval_defect(const SampledFunction& f, const SampledFunction& g, GridPtr spectral,
                       TransformMode mode) {
  const double nf = std::sqrt(inner_product(f, f).real());
  const double ng = std::sqrt(inner_product(g, g).real());
  if (!(nf > 0.0) || !(ng > 0.0)) {
    throw DomainError("Parseval defect undefined for a zero function");
  }
  const TransformPlan plan(f.grid, std::move(spectral), mode);
  const SampledFunction ff{plan.output(), plan.apply(f.values, TransformDirection::kForward), {}, {}, {}};
  const SampledFunction fg{plan.output(), plan.apply(g.values, TransformDirection::kForward), {}, {}, {}};
  const double c = inversion_constant(f.param());
  return std::abs(inner_product(f, g) - c * inner_product(ff, fg)) / (nf * ng);
}

}  // namespace weinstein
