#include "weinstein/io.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>

#include "weinstein/errors.hpp"
#include "weinstein/functions.hpp"

namespace weinstein {

namespace {

using nlohmann::json;

const char* rule_name(AxisRule r) {
  switch (r) {
    case AxisRule::kTrapezoid: return "trapezoid";
    case AxisRule::kGaussLegendre: return "gauss-legendre";
    case AxisRule::kCustom: break;
  }
  return "custom";
}

AxisRule rule_from_name(const std::string& s) {
  if (s == "trapezoid") return AxisRule::kTrapezoid;
  if (s == "gauss-legendre") return AxisRule::kGaussLegendre;
  if (s == "custom") return AxisRule::kCustom;
  throw ValidationError("unknown axis rule '" + s + "'");
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("JSON: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("JSON: bad field '") + key + "': " + e.what());
  }
}

}  // namespace

json to_json(const SampledFunction& f) {
  validate(f);
  const BoxGrid& g = *f.grid;
  json axes = json::array();
  for (int k = 0; k < g.dims(); ++k) {
    const GridAxis& a = g.axis(k);
    axes.push_back({{"nodes", a.nodes}, {"weights", a.weights}, {"extent", a.extent},
                    {"rule", rule_name(a.rule)}});
  }
  json values = json::array();
  for (const Complex& v : f.values) values.push_back({v.real(), v.imag()});
  json j{{"alpha", g.param().alpha()}, {"d", g.param().d()}, {"axes", std::move(axes)},
         {"values", std::move(values)}, {"label", f.label}};
  if (f.support_radius) j["support_radius"] = *f.support_radius;
  return j;
}

SampledFunction sampled_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("JSON: expected an object");
  const AlphaParam p(field<double>(j, "alpha"), field<int>(j, "d"));
  const json& ja = j.contains("axes") ? j["axes"] : throw ValidationError("JSON: missing field 'axes'");
  if (!ja.is_array()) throw ValidationError("JSON: 'axes' must be an array");
  std::vector<GridAxis> axes;
  for (const json& a : ja) {
    GridAxis axis;
    axis.nodes = field<std::vector<double>>(a, "nodes");
    axis.weights = field<std::vector<double>>(a, "weights");
    double span = 0.0;
    for (double x : axis.nodes) span = std::max(span, std::abs(x));
    axis.extent = a.contains("extent") ? field<double>(a, "extent") : span;
    axis.rule = a.contains("rule") ? rule_from_name(field<std::string>(a, "rule")) : AxisRule::kCustom;
    axes.push_back(std::move(axis));
  }
  SampledFunction f;
  f.grid = std::make_shared<const BoxGrid>(p, std::move(axes));
  const auto vals = field<std::vector<std::vector<double>>>(j, "values");
  for (const auto& v : vals) {
    if (v.size() != 2) throw ValidationError("JSON: values must be [re, im] pairs");
    f.values.emplace_back(v[0], v[1]);
  }
  if (j.contains("support_radius") && !j["support_radius"].is_null()) {
    f.support_radius = field<double>(j, "support_radius");
  }
  f.label = j.contains("label") ? field<std::string>(j, "label") : "";
  validate(f);
  return f;
}

void write_json(const json& j, const std::string& path) {
  const std::string text = j.dump(1) + "\n";
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_sampled(const SampledFunction& f, const std::string& path) { write_json(to_json(f), path); }

SampledFunction read_sampled(const std::string& path) { return sampled_from_json(read_json(path)); }

void write_csv(const SampledFunction& f, std::ostream& out) {
  const BoxGrid& g = *f.grid;
  for (int k = 0; k < g.dims(); ++k) out << 'x' << k + 1 << ',';
  out << "weight,re,im\n";
  out << std::setprecision(17);
  Point x(static_cast<std::size_t>(g.dims()));
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    g.point(k, x);
    for (double c : x) out << c << ',';
    out << g.weight(k) << ',' << f.values[k].real() << ',' << f.values[k].imag() << '\n';
  }
}

json to_json(const TypeEstimate& e) {
  json dirs = json::array();
  for (const DirectionFit& d : e.per_direction) {
    dirs.push_back({{"u", d.u}, {"rate", d.slope}, {"log_power", d.log_power},
                    {"residual", d.residual}, {"local_slopes", d.local_slopes}});
  }
  return {{"R_hat", e.r_hat}, {"s_min", e.s_min}, {"s_max", e.s_max}, {"c", e.c_used},
          {"directions", std::move(dirs)}};
}

json to_json(const RationalPolynomial& p) {
  json out = json::array();
  for (const auto& [nu, c] : p.terms()) out.push_back({{"nu", nu}, {"coeff", to_string(c)}});
  return out;
}

RationalPolynomial polynomial_from_json(const json& j, int dims) {
  return parse_polynomial_json(j.dump(), dims);
}

}  // namespace weinstein
