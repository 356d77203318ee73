#pragma once

#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "weinstein/grid.hpp"
#include "weinstein/polynomial.hpp"

namespace weinstein {

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  nlohmann::json table;  // per-suite data (null when unused)
  bool skipped = false;  // suite does not apply to this (alpha, d)
  std::string note;

  bool pass() const;
};

struct VerifyConfig {
  AlphaParam p{0.5, 1};
  Rational alpha_exact{1, 2};  // for the exact harmonic check
  int family_size = 20;
  unsigned seed = 1;
};

/// P(x) e^{-a ||x - c||^2} with random a in [0.8, 1.5], c = (c', 0), |c_j| <= 0.5,
/// and P of degree <= 2 (even in the last variable).
struct GaussianPolynomial {
  double a = 1.0;
  std::vector<double> center;
  RealPolynomial poly{2};

  Complex operator()(std::span<const double> x) const;
};

GaussianPolynomial random_gaussian_polynomial(const AlphaParam& p, std::mt19937& rng);

/// Box grids on which the whole family is resolved: spatial (7, 104 nodes), spectral (13, 104).
GridPtr family_spatial_grid(const AlphaParam& p);
GridPtr family_spectral_grid(const AlphaParam& p);

const std::vector<std::string>& suite_names();

/// One suite by name; "all" is handled by the caller. Throws ValidationError
/// for an unknown name. Library errors inside a suite propagate.
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

nlohmann::json to_json(const SuiteReport& r);

}  // namespace weinstein
