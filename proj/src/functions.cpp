#include "weinstein/functions.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

#include "json.hpp"
#include "weinstein/errors.hpp"
#include "weinstein/heat.hpp"
#include "weinstein/transform.hpp"

namespace weinstein {

namespace {

// key=value pairs; "poly" swallows the remainder.
std::map<std::string, std::string> parse_params(const std::string& body) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t eq = body.find('=', pos);
    if (eq == std::string::npos) throw ValidationError("function spec: expected key=value in '" + body + "'");
    const std::string key = body.substr(pos, eq - pos);
    std::size_t end = key == "poly" ? body.size() : body.find(',', eq);
    if (end == std::string::npos) end = body.size();
    if (!out.emplace(key, body.substr(eq + 1, end - eq - 1)).second) {
      throw ValidationError("function spec: repeated key '" + key + "'");
    }
    pos = end + 1;
  }
  return out;
}

double number(const std::map<std::string, std::string>& kv, const std::string& key,
              std::optional<double> fallback = std::nullopt) {
  const auto it = kv.find(key);
  if (it == kv.end()) {
    if (fallback) return *fallback;
    throw ValidationError("function spec: missing '" + key + "'");
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != it->second.size() || !std::isfinite(v)) {
    throw ValidationError("function spec: '" + key + "' is not a number: " + it->second);
  }
  return v;
}

void only_keys(const std::map<std::string, std::string>& kv, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : kv) {
    bool known = false;
    for (const char* a : keys) known = known || k == a;
    if (!known) throw ValidationError("function spec: unknown parameter '" + k + "'");
  }
}

double squared_norm(std::span<const double> x) {
  double r2 = 0.0;
  for (double c : x) r2 += c * c;
  return r2;
}

}  // namespace

RationalPolynomial parse_polynomial_json(const std::string& text, int dims) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("polynomial JSON: ") + e.what());
  }
  if (!j.is_array()) throw ValidationError("polynomial JSON must be an array of terms");
  RationalPolynomial p(dims);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("nu") || !t.contains("coeff")) {
      throw ValidationError("polynomial term needs 'nu' and 'coeff'");
    }
    MultiIndex nu;
    for (const auto& v : t["nu"]) {
      if (!v.is_number_integer()) throw ValidationError("multi-index entries must be integers");
      nu.push_back(v.get<int>());
    }
    const auto& c = t["coeff"];
    Rational r;
    if (c.is_string()) {
      r = parse_rational(c.get<std::string>());
    } else if (c.is_number_integer()) {
      r = Rational(c.get<long long>());
    } else if (c.is_number()) {
      r = Rational(c.get<double>());  // exact binary value of the double
    } else {
      throw ValidationError("coefficient must be a number or a rational string");
    }
    p.add_term(nu, r);
  }
  return p;
}

FunctionSpec parse_function_spec(const std::string& spec, const AlphaParam& p) {
  const std::size_t colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const auto kv = parse_params(colon == std::string::npos ? "" : spec.substr(colon + 1));
  FunctionSpec f;
  f.label = spec;
  if (kind == "gaussian") {
    only_keys(kv, {"a"});
    const double a = number(kv, "a");
    if (!(a > 0.0)) throw ValidationError("gaussian: a must be positive");
    f.fn = [a](std::span<const double> x) { return Complex(std::exp(-a * squared_norm(x))); };
    f.extent = std::sqrt(30.0 / a);
    f.spectral_extent = std::sqrt(120.0 * a);
  } else if (kind == "bump") {
    only_keys(kv, {"R", "eps"});
    const double r = number(kv, "R", 1.0), eps = number(kv, "eps", 0.25);
    if (!(r > 0.0) || !(eps > 0.0)) throw ValidationError("bump: R and eps must be positive");
    f.fn = [r, eps](std::span<const double> x) {
      const double q = squared_norm(x) / (r * r);
      return q < 1.0 ? Complex(std::exp(-eps / (1.0 - q))) : Complex(0.0);
    };
    f.support_radius = r;
    f.extent = r;
  } else if (kind == "heat") {
    only_keys(kv, {"t"});
    const HeatParams h(p, number(kv, "t"));
    f.fn = heat_kernel_fn(h);
    f.extent = std::sqrt(4.0 * h.t * 36.0);
    f.spectral_extent = std::sqrt(30.0 / h.t);
  } else if (kind == "poly-gauss") {
    only_keys(kv, {"a", "poly"});
    const double a = number(kv, "a", 1.0);
    if (!(a > 0.0)) throw ValidationError("poly-gauss: a must be positive");
    const auto it = kv.find("poly");
    if (it == kv.end()) throw ValidationError("poly-gauss: missing poly=[...]");
    const RealPolynomial q = to_real(parse_polynomial_json(it->second, p.dims()));
    f.fn = [a, q](std::span<const double> x) {
      return Complex(evaluate(q, x) * std::exp(-a * squared_norm(x)));
    };
    // the polynomial factor adds a few units of log-tail
    f.extent = std::sqrt((30.0 + 2.0 * q.degree()) / a);
    f.spectral_extent = std::sqrt(4.0 * a * (30.0 + 2.0 * q.degree()));
  } else {
    throw ValidationError("unknown function '" + kind + "' (gaussian, bump, heat, poly-gauss)");
  }
  return f;
}

int default_resolution(int fallback) {
  const char* env = std::getenv("WEINSTEIN_DEFAULT_RESOLUTION");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 8 || n > 4096) {
    throw ValidationError(std::string("WEINSTEIN_DEFAULT_RESOLUTION must be an integer in [8, 4096], got ") + env);
  }
  return static_cast<int>(n);
}

GridPtr default_grid(const AlphaParam& p, const FunctionSpec& f, int nodes) {
  return build_box_grid(p, f.extent, nodes, AxisRule::kGaussLegendre);
}

GridPtr default_spectral_grid(const AlphaParam& p, const FunctionSpec& f, int nodes) {
  if (f.spectral_extent > 0.0) return build_box_grid(p, f.spectral_extent, nodes, AxisRule::kGaussLegendre);
  return default_spectral_grid(*default_grid(p, f, nodes));
}

SampledFunction sample(const FunctionSpec& f, GridPtr grid) {
  return sample(std::move(grid), f.fn, f.label, f.support_radius);
}

}  // namespace weinstein
