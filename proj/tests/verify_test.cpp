#include <gtest/gtest.h>

#include <algorithm>

#include "weinstein/errors.hpp"
#include "weinstein/verify.hpp"

using namespace weinstein;

TEST(Verify, SuiteNames) {
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 12u);
  for (const char* n : {"plancherel", "heat-kernel", "inversion", "translation", "convolution",
                        "heat-approx-identity", "paley-wiener", "support-growth", "modulus",
                        "independence", "harmonics", "hankel-reduction"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  }
  EXPECT_THROW(run_suite("all", VerifyConfig{}), ValidationError);
  EXPECT_THROW(run_suite("nope", VerifyConfig{}), ValidationError);
}

TEST(Verify, ExactHarmonicsForRationalAlpha) {
  VerifyConfig cfg;
  cfg.alpha_exact = Rational(1, 3);
  cfg.p = AlphaParam(1.0 / 3.0, 2);
  const SuiteReport r = run_suite("harmonics", cfg);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checks.size(), 2u);
}

TEST(Verify, ReportJson) {
  VerifyConfig cfg;
  cfg.family_size = 3;
  const SuiteReport r = run_suite("plancherel", cfg);
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j["suite"], "plancherel");
  EXPECT_EQ(j["pass"], r.pass());
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(j["checks"].size(), 2u);
}

TEST(Verify, HankelReductionSkipsBeyondDOne) {
  VerifyConfig cfg;
  cfg.p = AlphaParam(0.5, 2);
  const SuiteReport r = run_suite("hankel-reduction", cfg);
  EXPECT_TRUE(r.skipped);
  EXPECT_TRUE(r.pass());
}

TEST(Verify, FamilyIsEvenInLastVariableAndDecays) {
  std::mt19937 rng(9);
  const AlphaParam p(0.5, 1);
  for (int i = 0; i < 10; ++i) {
    const GaussianPolynomial f = random_gaussian_polynomial(p, rng);
    EXPECT_GE(f.a, 0.8);
    EXPECT_LE(f.a, 1.5);
    EXPECT_EQ(f.center.back(), 0.0);
    const std::vector<double> x{0.3, 0.7}, edge{7.0, 0.1};
    EXPECT_EQ(f(x), f(std::vector<double>{0.3, -0.7}));
    EXPECT_LE(std::abs(f(edge)), 1e-12);
  }
}
