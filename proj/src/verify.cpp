#include "weinstein/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "weinstein/errors.hpp"
#include "weinstein/heat.hpp"
#include "weinstein/paley_wiener.hpp"
#include "weinstein/transform.hpp"
#include "weinstein/translation.hpp"

namespace weinstein {

namespace {

using nlohmann::json;
using V = std::vector<double>;

void at_most(SuiteReport& r, std::string name, double value, double threshold, std::string detail = {}) {
  r.checks.push_back({std::move(name), value, threshold, value <= threshold, std::move(detail)});
}

void at_least(SuiteReport& r, std::string name, double value, double threshold, std::string detail = {}) {
  r.checks.push_back({std::move(name), value, threshold, value >= threshold, std::move(detail)});
}

void holds(SuiteReport& r, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back({std::move(name), ok ? 1.0 : 0.0, 1.0, ok, std::move(detail)});
}

std::string num(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const Complex& c : v) m = std::max(m, std::abs(c));
  return m;
}

SpatialFn bump(double radius, double eps) {
  return [=](std::span<const double> x) {
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    r2 /= radius * radius;
    return r2 < 1.0 ? Complex(std::exp(-eps / (1.0 - r2))) : Complex(0.0);
  };
}

// x with ||x|| = r along the diagonal of all coordinates.
V diagonal(int dims, double r) { return V(static_cast<std::size_t>(dims), r / std::sqrt(dims)); }

std::vector<SampledFunction> family(const VerifyConfig& cfg, GridPtr g, int count) {
  std::mt19937 rng(cfg.seed);
  std::vector<SampledFunction> out;
  for (int i = 0; i < count; ++i) {
    const GaussianPolynomial f = random_gaussian_polynomial(cfg.p, rng);
    out.push_back(sample(g, f, "family-" + std::to_string(i)));
  }
  return out;
}

SuiteReport plancherel(const VerifyConfig& cfg) {
  SuiteReport r;
  const GridPtr lg = family_spectral_grid(cfg.p);
  const auto fs = family(cfg, family_spatial_grid(cfg.p), cfg.family_size);
  double worst = 0.0, worst_pair = 0.0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    worst = std::max(worst, plancherel_defect(fs[i], lg));
    if (i > 0) worst_pair = std::max(worst_pair, parseval_defect(fs[i - 1], fs[i], lg));
  }
  at_most(r, "plancherel relative defect", worst, 1e-6);
  if (fs.size() > 1) at_most(r, "parseval relative defect", worst_pair, 1e-6);
  return r;
}

SuiteReport inversion(const VerifyConfig& cfg) {
  SuiteReport r;
  const GridPtr xg = family_spatial_grid(cfg.p), lg = family_spectral_grid(cfg.p);
  double worst = 0.0;
  for (const SampledFunction& f : family(cfg, xg, cfg.family_size)) {
    worst = std::max(worst, sup_relative_error(inverse(forward(f, lg), xg).values, f.values));
  }
  at_most(r, "inverse(forward f) sup relative error", worst, 1e-6);
  return r;
}

SuiteReport heat_kernel_suite(const VerifyConfig& cfg) {
  SuiteReport r;
  r.table = json::array();
  for (double t : {0.1, 0.5, 1.0}) {
    const HeatParams h(cfg.p, t);
    const GridPtr xg = build_box_grid(cfg.p, std::sqrt(144.0 * t), 96, AxisRule::kGaussLegendre);
    const GridPtr lg = build_box_grid(cfg.p, std::sqrt(30.0 / t), 96, AxisRule::kGaussLegendre);
    const SampledFunction e = sample(xg, heat_kernel_fn(h), "E_t");
    const SampledFunction fe = forward(e, lg);
    double err = 0.0;
    for (std::size_t k = 0; k < lg->size(); ++k) {
      const Point z = lg->point(k);
      err = std::max(err, std::abs(fe.values[k] - std::exp(-t * std::pow(norm(z), 2))));
    }
    const double mass = integrate(e).real();
    at_most(r, "t=" + num(t) + " sup |F E_t - e^{-t|l|^2}|", err, 1e-7);
    at_most(r, "t=" + num(t) + " |integral E_t - 1|", std::abs(mass - 1.0), 1e-8);
    r.table.push_back({{"t", t}, {"sup_error", err}, {"mass", mass}});
  }
  return r;
}

SuiteReport translation(const VerifyConfig& cfg) {
  SuiteReport r;
  const int n = cfg.p.dims();
  const GridPtr xg = family_spatial_grid(cfg.p), lg = family_spectral_grid(cfg.p);
  double worst = 0.0;
  bool warned = false;
  for (const SampledFunction& f : family(cfg, xg, 3)) {
    for (double len : {0.5, 1.2, 2.0}) {
      const V x = diagonal(n, len);
      const SpectralTranslation s = translate_spectral(f, x, lg);
      worst = std::max(worst, sup_relative_error(s.result.values, translate_angular(f, x).values));
      warned = warned || s.warning.has_value();
    }
  }
  at_most(r, "angular vs spectral sup relative error", worst, 1e-6);
  holds(r, "spectral box captures the spectrum", !warned);

  // p = 1 is an equality for positive f, so quadrature error must stay well below 1e-6
  const GridPtr bg = build_box_grid(cfg.p, 3.0, 192, AxisRule::kGaussLegendre);
  const SampledFunction b = sample(bg, bump(1.0, 1.0), "bump", 1.0);
  for (double q : {1.0, 2.0, double(INFINITY)}) {
    double ratio = 0.0;
    for (double len : {0.5, 1.0, 2.0}) {
      const NormCheck c = translation_norm_check(b, diagonal(n, len), q, 192);
      ratio = std::max(ratio, c.lhs / c.rhs);
    }
    at_most(r, "p=" + num(q) + " max ||tau_x f|| / ||f||", ratio, 1.0 + 1e-6);
  }
  return r;
}

SuiteReport convolution(const VerifyConfig& cfg) {
  SuiteReport r;
  const AlphaParam& p = cfg.p;
  // f*g is wider than f and g; at alpha = 1.5 a box of 7 loses ~1e-5 of its mass
  const GridPtr xg = build_box_grid(p, 8.0, 56, AxisRule::kGaussLegendre);
  const GridPtr lg = build_box_grid(p, 4.5, 44, AxisRule::kGaussLegendre);
  const auto fn = [](double a, double c1) {
    return [=](std::span<const double> x) {
      double r2 = 0.0;
      for (double c : x) r2 += c * c;
      return Complex(std::exp(-a * r2) * (1.0 + c1 * x[0] + (c1 > 0 ? x[0] * x[0] : 0.0)));
    };
  };
  const SampledFunction f = sample(xg, fn(0.9, 0.5), "f"), g = sample(xg, fn(1.4, -0.4), "g");
  ConvolutionOptions opt;
  opt.angular_nodes = 24;
  const SampledFunction direct = convolve(f, g, ConvolutionMethod::kDirect, opt);

  const SampledFunction fd = forward(direct, lg), ff = forward(f, lg), fg = forward(g, lg);
  std::vector<Complex> prod(lg->size());
  for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = ff.values[k] * fg.values[k];
  at_most(r, "F(f*g) vs Ff.Fg sup relative error", sup_relative_error(fd.values, prod), 1e-6);

  const GridPtr fine = build_box_grid(p, 8.0, 80, AxisRule::kGaussLegendre);
  opt.spectral = build_box_grid(p, 9.0, 80, AxisRule::kGaussLegendre);
  opt.output = xg;
  const SampledFunction spec = convolve(sample(fine, f.source, "f"), sample(fine, g.source, "g"),
                                        ConvolutionMethod::kSpectral, opt);
  at_most(r, "spectral vs direct sup relative error", sup_relative_error(spec.values, direct.values), 1e-6);

  struct Triple { double p, q, r; };
  for (const Triple& t : {Triple{1, 1, 1}, Triple{1, 2, 2}, Triple{2, 2, INFINITY}}) {
    const double lhs = lp_norm(direct, t.r), rhs = lp_norm(f, t.p) * lp_norm(g, t.q);
    at_most(r, "young (" + num(t.p) + "," + num(t.q) + "," + num(t.r) +
                   ") ratio", lhs / rhs, 1.0 + 1e-6);
  }
  return r;
}

SuiteReport approx_identity(const VerifyConfig& cfg) {
  SuiteReport r;
  const double a = 0.5;
  const GridPtr xg = build_box_grid(cfg.p, std::sqrt(30.0 / a), 80, AxisRule::kGaussLegendre);
  const GridPtr lg = build_box_grid(cfg.p, std::sqrt(120.0 * a), 80, AxisRule::kGaussLegendre);
  const SampledFunction f = sample(xg, [a](std::span<const double> x) {
    return Complex(std::exp(-a * std::pow(norm(x), 2)));
  }, "gaussian");
  const double f1 = lp_norm(f, 1.0);
  r.table = json::array();
  std::vector<double> err, scaled;
  for (double t : {1e-1, 2.5e-2, 6.25e-3, 1.5625e-3}) {
    SampledFunction d = heat_evolve(f, t, lg);
    for (std::size_t k = 0; k < d.values.size(); ++k) d.values[k] -= f.values[k];
    err.push_back(lp_norm(d, 1.0));
    scaled.push_back(err.back() / std::sqrt(t));
    r.table.push_back({{"t", t}, {"error", err.back()}, {"error_over_sqrt_t", scaled.back()}});
  }
  bool decreasing = true;
  for (std::size_t k = 1; k < err.size(); ++k) decreasing = decreasing && err[k] < err[k - 1];
  holds(r, "||f*E_t - f||_1 strictly decreasing", decreasing);
  at_most(r, "final error / ||f||_1", err.back() / f1, 1e-2);
  at_most(r, "max (error/sqrt t) / first", *std::max_element(scaled.begin(), scaled.end()) / scaled.front(),
          1.0 + 1e-6);
  return r;
}

SuiteReport paley_wiener(const VerifyConfig& cfg) {
  SuiteReport r;
  const GridPtr g1 = build_box_grid(cfg.p, 1.0, 48, AxisRule::kGaussLegendre);
  const GridPtr g2 = build_box_grid(cfg.p, 2.0, 64, AxisRule::kGaussLegendre);
  const SampledFunction b1 = sample(g1, bump(1.0, 0.25), "bump", 1.0);
  const SampledFunction b2 = sample(g2, bump(2.0, 0.25), "bump", 2.0);
  const double r1 = estimate_exponential_type(b1).r_hat;
  const double r2 = estimate_exponential_type(b2).r_hat;
  at_least(r, "R_hat >= 0.85", r1, 0.85);
  at_most(r, "R_hat <= 1.05", r1, 1.05);
  at_most(r, "|R_hat(2R) / R_hat(R) - 2| / 2", std::abs(r2 / r1 - 2.0) / 2.0, 0.05);

  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> re(-6.0, 6.0), im(-1.0, 1.0);
  std::uniform_real_distribution<double> len(0.0, 8.0);
  std::vector<SpectralPoint> pts;
  const int n = cfg.p.dims();
  while (pts.size() < 200) {
    V v(static_cast<std::size_t>(n));
    for (double& c : v) c = im(rng);
    const double s = len(rng) / std::max(norm(v), 1e-300);
    SpectralPoint z;
    for (int j = 0; j < n; ++j) z.emplace_back(re(rng), s * v[static_cast<std::size_t>(j)]);
    z.back() = Complex(std::abs(z.back().real()), z.back().imag());
    // keep the Bessel argument in range
    if (std::abs(z.back()) * g1->axis(n - 1).nodes.back() <= kBesselWorkingRange) pts.push_back(z);
  }
  const BoundReport bound = pw_bound_check(b1, pts);
  at_most(r, "max |Ff(y)| / (||f||_1 e^{R|Im y|}) over 200 points", bound.max_ratio, 1.0 + 1e-6);
  r.table = {{"R_hat", r1}, {"R_hat_dilated", r2}, {"bound_max_ratio", bound.max_ratio}};
  return r;
}

SuiteReport support_growth(const VerifyConfig& cfg) {
  SuiteReport r;
  const int n = cfg.p.dims();
  const GridPtr xg = build_box_grid(cfg.p, 2.0, 64, AxisRule::kGaussLegendre);
  const SampledFunction f = sample(xg, bump(1.0, 0.25), "bump", 1.0);
  const V z = diagonal(n, 1.0);
  const SampledFunction t = translate_angular(f, z, xg, 32);
  const double h = 2.0 * xg->spacing();
  double outside = 0.0;
  for (std::size_t k = 0; k < xg->size(); ++k) {
    if (norm(xg->point(k)) >= 2.0 + h) outside = std::max(outside, std::abs(t.values[k]));
  }
  at_most(r, "max |tau_z f| outside 2 + 2h, relative", outside / max_abs(t.values), 1e-8);
  TypeOptions opt;
  for (int k = 0; k <= 16; ++k) opt.s_grid.push_back(4.0 + 0.75 * k);
  const double rt = estimate_exponential_type(t, opt).r_hat;
  at_most(r, "R_hat(tau_z f)", rt, 2.1);
  return r;
}

SuiteReport modulus(const VerifyConfig& cfg) {
  SuiteReport r;
  const int n = cfg.p.dims();
  const GridPtr xg = build_box_grid(cfg.p, 1.6, 128, AxisRule::kGaussLegendre);
  const SampledFunction f = sample(xg, bump(1.0, 1.0), "bump", 1.0);
  double lo = INFINITY, hi = 0.0;
  r.table = json::array();
  for (int k = 1; k <= 6; ++k) {
    const double len = std::ldexp(1.0, -k);
    const double q = translation_modulus(f, diagonal(n, len), 1.0) / len;
    lo = std::min(lo, q);
    hi = std::max(hi, q);
    r.table.push_back({{"norm_x", len}, {"modulus_over_norm_x", q}});
  }
  at_most(r, "max/min of ||tau_x f - f||_1 / ||x||", hi / lo, 2.0);
  return r;
}

SuiteReport independence(const VerifyConfig& cfg) {
  SuiteReport r;
  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> u(-1.5, 1.5), v(0.1, 1.5);
  std::vector<Point> pts;
  for (int k = 0; k < 5; ++k) {
    Point x;
    for (int j = 0; j + 1 < cfg.p.dims(); ++j) x.push_back(u(rng));
    x.push_back(v(rng));
    pts.push_back(x);
  }
  const auto xi = random_spectral_samples(cfg.p, 200, 4.0, cfg.seed + 1);
  at_least(r, "sigma_min, 5 distinct points", kernel_independence(cfg.p, pts, xi), 1e-3);
  pts.push_back(pts.front());
  at_most(r, "sigma_min with a duplicated point", kernel_sigma_min(cfg.p, pts, xi), 1e-12);
  return r;
}

SuiteReport harmonics(const VerifyConfig& cfg) {
  SuiteReport r;
  const int n = cfg.p.dims();
  RationalPolynomial h(n), sq(n);
  MultiIndex e1(static_cast<std::size_t>(n), 0), last = e1;
  e1.front() = 2;
  last.back() = 2;
  h.add_term(e1, Rational(2) * cfg.alpha_exact + 2);
  h.add_term(last, Rational(-1));
  for (int j = 0; j < n; ++j) {
    MultiIndex nu(static_cast<std::size_t>(n), 0);
    nu[static_cast<std::size_t>(j)] = 2;
    sq.add_term(nu, Rational(1));
  }
  holds(r, "(2a+2) x_1^2 - x_{d+1}^2 is harmonic", is_generalized_harmonic(h, cfg.alpha_exact));
  holds(r, "||x||^2 is not harmonic", !is_generalized_harmonic(sq, cfg.alpha_exact));
  return r;
}

SuiteReport hankel_reduction(const VerifyConfig& cfg) {
  SuiteReport r;
  if (cfg.p.d() != 1) {
    r.skipped = true;
    r.note = "sphere quadrature is implemented for d = 1 only";
    return r;
  }
  const double a = cfg.p.alpha();
  const SphereGrid sg = build_sphere_grid(cfg.p, 32);
  const auto profile = [](double s) { return Complex(std::exp(-s * s) * (1.0 + s * s)); };
  const GridPtr xg = build_box_grid(cfg.p, 6.0, 64, AxisRule::kGaussLegendre);
  const SampledFunction f = sample(xg, [&](std::span<const double> x) { return profile(norm(x)); }, "radial");
  const std::vector<Complex> lams{0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5};
  const auto h = hankel_transform(a + 0.5 * cfg.p.d(), sample_radial(profile, 6.0, 80), lams);
  std::vector<Complex> phi;
  Complex hh = 0.0, hp = 0.0;
  for (std::size_t k = 0; k < lams.size(); ++k) {
    phi.push_back(spherical_coefficient(f, RealPolynomial::constant(2, 1.0), lams[k], sg,
                                        CoefficientNormalization::kHomogeneous));
    hh += std::norm(h[k]);
    hp += std::conj(h[k]) * phi.back();
  }
  const Complex c = hp / hh;
  double res = 0.0;
  for (std::size_t k = 0; k < lams.size(); ++k) res = std::max(res, std::abs(phi[k] - c * h[k]));
  at_most(r, "max |Phi_0 - c H| / max |Phi_0|", res / max_abs(phi), 1e-6);
  r.table = {{"fitted_scalar", {c.real(), c.imag()}}};
  return r;
}

const std::map<std::string, std::function<SuiteReport(const VerifyConfig&)>>& registry() {
  static const std::map<std::string, std::function<SuiteReport(const VerifyConfig&)>> m{
      {"plancherel", plancherel},
      {"heat-kernel", heat_kernel_suite},
      {"inversion", inversion},
      {"translation", translation},
      {"convolution", convolution},
      {"heat-approx-identity", approx_identity},
      {"paley-wiener", paley_wiener},
      {"support-growth", support_growth},
      {"modulus", modulus},
      {"independence", independence},
      {"harmonics", harmonics},
      {"hankel-reduction", hankel_reduction},
  };
  return m;
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Complex GaussianPolynomial::operator()(std::span<const double> x) const {
  double r2 = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) r2 += (x[j] - center[j]) * (x[j] - center[j]);
  return Complex(evaluate(poly, x) * std::exp(-a * r2));
}

GaussianPolynomial random_gaussian_polynomial(const AlphaParam& p, std::mt19937& rng) {
  std::uniform_real_distribution<double> ua(0.8, 1.5), uc(-0.5, 0.5), coef(-1.0, 1.0);
  const int n = p.dims();
  GaussianPolynomial f;
  f.a = ua(rng);
  f.center.assign(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j + 1 < n; ++j) f.center[static_cast<std::size_t>(j)] = uc(rng);
  f.poly = RealPolynomial::constant(n, 1.0);
  for (int j = 0; j < n; ++j) {
    for (int k : {1, 2}) {
      if (j + 1 == n && k == 1) continue;  // even in x_{d+1}
      MultiIndex nu(static_cast<std::size_t>(n), 0);
      nu[static_cast<std::size_t>(j)] = k;
      f.poly.add_term(nu, coef(rng));
    }
  }
  return f;
}

GridPtr family_spatial_grid(const AlphaParam& p) {
  return build_box_grid(p, 7.0, 104, AxisRule::kGaussLegendre);
}

GridPtr family_spectral_grid(const AlphaParam& p) {
  return build_box_grid(p, 13.0, 104, AxisRule::kGaussLegendre);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, fn] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ValidationError("unknown verify suite '" + name + "'");
  SuiteReport r = it->second(cfg);
  r.suite = name;
  return r;
}

json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const Check& c : r.checks) {
    json j{{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  json out{{"suite", r.suite}, {"pass", r.pass()}, {"skipped", r.skipped}, {"checks", std::move(checks)}};
  if (!r.note.empty()) out["note"] = r.note;
  if (!r.table.is_null()) out["table"] = r.table;
  return out;
}

}  // namespace weinstein
