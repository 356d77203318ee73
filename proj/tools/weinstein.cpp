// weinstein: command-line front end.
// Exit codes: 0 ok, 1 I/O, 2 validation/domain/precondition, 3 range/numerical, 4 verify failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weinstein/errors.hpp"
#include "weinstein/functions.hpp"
#include "weinstein/heat.hpp"
#include "weinstein/io.hpp"
#include "weinstein/paley_wiener.hpp"
#include "weinstein/transform.hpp"
#include "weinstein/translation.hpp"
#include "weinstein/verify.hpp"

using namespace weinstein;
using nlohmann::json;

namespace {

struct Common {
  std::string alpha = "0.5";
  int d = 1;
  std::string func;
  std::string in;
  std::string out = "-";
  std::string csv;
  int nodes = 0;  // 0: default_resolution()
  double extent = 0.0;
  double spectral_extent = 0.0;
};

void add_common(CLI::App* app, Common& c, bool input = true) {
  app->add_option("--alpha", c.alpha, "Bessel index alpha > -1/2 (decimal or p/q)");
  app->add_option("--d", c.d, "number of Euclidean variables d >= 1");
  if (input) {
    app->add_option("--func", c.func, "built-in function, e.g. gaussian:a=1, bump:R=1, heat:t=0.5");
    app->add_option("--in", c.in, "SampledFunction JSON file ('-' for stdin)");
  }
  app->add_option("--out", c.out, "output file ('-' for stdout)");
  app->add_option("--csv", c.csv, "also write a CSV export here");
  app->add_option("--nodes", c.nodes, "nodes per axis (default: WEINSTEIN_DEFAULT_RESOLUTION or 64)");
  app->add_option("--extent", c.extent, "spatial half-width of the box");
  app->add_option("--spectral-extent", c.spectral_extent, "spectral half-width of the box");
}

AlphaParam param(const Common& c) { return AlphaParam(parse_rational(c.alpha).convert_to<double>(), c.d); }

int nodes(const Common& c) { return c.nodes > 0 ? c.nodes : default_resolution(); }

struct Input {
  SampledFunction f;
  std::optional<FunctionSpec> spec;
};

Input load(const Common& c, const std::string& func, const std::string& in) {
  if (func.empty() == in.empty()) throw ValidationError("give exactly one of --func and --in");
  if (!in.empty()) return {read_sampled(in), std::nullopt};
  const AlphaParam p = param(c);
  FunctionSpec s = parse_function_spec(func, p);
  if (c.extent > 0.0) s.extent = c.extent;
  if (c.spectral_extent > 0.0) s.spectral_extent = c.spectral_extent;
  return {sample(s, default_grid(p, s, nodes(c))), s};
}

Input load(const Common& c) { return load(c, c.func, c.in); }

GridPtr spectral_grid(const Common& c, const Input& in) {
  const AlphaParam& p = in.f.param();
  if (in.spec) return default_spectral_grid(p, *in.spec, nodes(c));
  if (c.spectral_extent > 0.0) return build_box_grid(p, c.spectral_extent, nodes(c), AxisRule::kGaussLegendre);
  return default_spectral_grid(*in.f.grid);
}

void emit(const Common& c, const SampledFunction& f) {
  write_sampled(f, c.out);
  if (!c.csv.empty()) {
    std::ofstream out(c.csv);
    if (!out) throw IoError("cannot open '" + c.csv + "' for writing");
    write_csv(f, out);
  }
}

void describe(const SampledFunction& f) {
  const BoxGrid& g = *f.grid;
  std::cerr << "alpha=" << g.param().alpha() << " d=" << g.param().d() << " grid=";
  for (int j = 0; j < g.dims(); ++j) std::cerr << (j ? "x" : "") << g.axis_size(j);
  std::cerr << " extents=";
  for (int j = 0; j < g.dims(); ++j) std::cerr << (j ? "," : "") << g.axis(j).extent;
  std::cerr << '\n';
}

std::vector<double> parse_vector(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      v.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ValidationError("bad number '" + item + "' in '" + s + "'");
  }
  return v;
}

int run(int argc, char** argv) {
  CLI::App app{"Weinstein transform calculus on the half-space"};
  app.require_subcommand(1);

  Common c;
  auto* transform = app.add_subcommand("transform", "forward Weinstein transform");
  add_common(transform, c);

  auto* inverse_cmd = app.add_subcommand("inverse", "inverse transform of spectral samples");
  add_common(inverse_cmd, c);

  std::string x_arg, method = "angular";
  int angular_nodes = 48;
  auto* translate = app.add_subcommand("translate", "generalized translation tau_x f");
  add_common(translate, c);
  translate->add_option("--x", x_arg, "shift, comma separated (d+1 entries)")->required();
  translate->add_option("--method", method, "angular or spectral");
  translate->add_option("--angular-nodes", angular_nodes, "angular quadrature nodes");

  std::string func2, in2, conv_method = "spectral";
  auto* convolve_cmd = app.add_subcommand("convolve", "Weinstein convolution f * g");
  add_common(convolve_cmd, c);
  convolve_cmd->add_option("--func2", func2, "second factor, built-in spec");
  convolve_cmd->add_option("--in2", in2, "second factor, JSON file");
  convolve_cmd->add_option("--method", conv_method, "direct or spectral");

  double t = 0.0;
  auto* heat = app.add_subcommand("heat-evolve", "heat semigroup f * E_t");
  add_common(heat, c);
  heat->add_option("--t", t, "time t > 0")->required();

  int n_dirs = 8;
  double smin = 4.0, smax = 20.0;
  int s_points = 17;
  unsigned seed = 20240611;
  auto* pw = app.add_subcommand("pw-estimate", "exponential type of a compactly supported function");
  add_common(pw, c);
  pw->add_option("--directions", n_dirs, "random directions besides the coordinate ones");
  pw->add_option("--smin", smin, "smallest s");
  pw->add_option("--smax", smax, "largest s");
  pw->add_option("--s-points", s_points, "points in the s grid");
  pw->add_option("--seed", seed, "seed for the random directions");

  std::string poly;
  auto* harmonic = app.add_subcommand("harmonic-check", "is P annihilated by the Weinstein operator");
  harmonic->add_option("--alpha", c.alpha, "alpha, exact (decimal or p/q)");
  harmonic->add_option("--d", c.d, "number of Euclidean variables");
  harmonic->add_option("--poly", poly, "JSON terms [{\"nu\":[...],\"coeff\":...}]")->required();
  harmonic->add_option("--out", c.out, "output file ('-' for stdout)");

  std::string suite = "all";
  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--alpha", c.alpha, "alpha (decimal or p/q)");
  verify->add_option("--d", c.d, "number of Euclidean variables");
  verify->add_option("--family-size", vc.family_size, "random test functions per family suite");
  verify->add_option("--seed", vc.seed, "random seed");
  verify->add_option("--out", c.out, "report file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*transform) {
    const Input in = load(c);
    describe(in.f);
    const SampledFunction ff = forward(in.f, spectral_grid(c, in));
    std::cerr << "||Ff||_inf=" << lp_norm(ff, INFINITY) << " ||f||_1=" << lp_norm(in.f, 1.0) << '\n';
    emit(c, ff);
  } else if (*inverse_cmd) {
    if (c.in.empty()) throw ValidationError("inverse needs --in");
    const SampledFunction g = read_sampled(c.in);
    describe(g);
    const GridPtr xg = c.extent > 0.0 ? build_box_grid(g.param(), c.extent, nodes(c), AxisRule::kGaussLegendre)
                                      : default_spectral_grid(*g.grid);
    emit(c, inverse(g, xg));
  } else if (*translate) {
    const Input in = load(c);
    const std::vector<double> x = parse_vector(x_arg);
    describe(in.f);
    if (method == "angular") {
      emit(c, translate_angular(in.f, x, nullptr, angular_nodes));
    } else if (method == "spectral") {
      const SpectralTranslation s = translate_spectral(in.f, x, spectral_grid(c, in));
      if (s.warning) std::cerr << "warning: " << *s.warning << '\n';
      emit(c, s.result);
    } else {
      throw ValidationError("--method must be angular or spectral");
    }
  } else if (*convolve_cmd) {
    const Input f = load(c);
    const Input g = load(c, func2, in2);
    describe(f.f);
    ConvolutionOptions opt;
    opt.spectral = spectral_grid(c, f);
    ConvolutionMethod m;
    if (conv_method == "direct") {
      m = ConvolutionMethod::kDirect;
    } else if (conv_method == "spectral") {
      m = ConvolutionMethod::kSpectral;
    } else {
      throw ValidationError("--method must be direct or spectral");
    }
    emit(c, convolve(f.f, g.f, m, opt));
  } else if (*heat) {
    const Input in = load(c);
    describe(in.f);
    emit(c, heat_evolve(in.f, t, spectral_grid(c, in)));
  } else if (*pw) {
    const Input in = load(c);
    describe(in.f);
    if (s_points < 4 || !(smax > smin)) throw ValidationError("need --s-points >= 4 and smax > smin");
    TypeOptions opt;
    opt.random_directions = n_dirs;
    opt.seed = seed;
    for (int k = 0; k < s_points; ++k) opt.s_grid.push_back(smin + (smax - smin) * k / (s_points - 1));
    const TypeEstimate e = estimate_exponential_type(in.f, opt);
    std::cerr << "R_hat=" << e.r_hat;
    if (in.f.support_radius) std::cerr << " declared support radius=" << *in.f.support_radius;
    std::cerr << '\n';
    json j = to_json(e);
    j["label"] = in.f.label;
    write_json(j, c.out);
  } else if (*harmonic) {
    const Rational a = parse_rational(c.alpha);
    const AlphaParam p(a.convert_to<double>(), c.d);
    const RationalPolynomial q = parse_polynomial_json(poly, p.dims());
    if (!q.is_homogeneous()) throw ValidationError("polynomial must be homogeneous");
    const bool ok = is_generalized_harmonic(q, a);
    std::cerr << (ok ? "harmonic" : "not harmonic") << '\n';
    write_json({{"alpha", to_string(a)}, {"degree", q.degree()}, {"harmonic", ok},
                {"laplacian", to_json(weinstein_laplacian(q, a))}},
               c.out);
  } else if (*verify) {
    vc.alpha_exact = parse_rational(c.alpha);
    vc.p = AlphaParam(vc.alpha_exact.convert_to<double>(), c.d);
    const std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    json reports = json::array();
    bool all_pass = true;
    for (const std::string& name : names) {
      const SuiteReport r = run_suite(name, vc);
      all_pass = all_pass && r.pass();
      std::cerr << (r.skipped ? "SKIP " : r.pass() ? "PASS " : "FAIL ") << name << '\n';
      for (const Check& ch : r.checks) {
        std::cerr << "  " << (ch.pass ? "ok   " : "FAIL ") << ch.name << ": " << ch.value
                  << " (limit " << ch.threshold << ")\n";
      }
      if (r.table.is_array()) {
        for (const auto& row : r.table) std::cerr << "  " << row.dump() << '\n';
      }
      reports.push_back(to_json(r));
    }
    write_json({{"alpha", c.alpha}, {"d", c.d}, {"pass", all_pass}, {"suites", reports}}, c.out);
    return all_pass ? 0 : 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return 2;
  } catch (const RangeError& e) {
    std::cerr << "range error: " << e.what() << '\n';
    return 3;
  } catch (const NumericalQualityError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
