#include <gtest/gtest.h>

#include "sgq/errors.hpp"
#include "sgq/proptest.hpp"

using namespace sgq;

TEST(Proptest, ZeroTrials) {
  ProptestConfig config;
  config.suite = "factorization";
  config.trials = 0;
  auto report = run_proptest(config);
  EXPECT_TRUE(report.pass());
  for (const auto& r : report.results) EXPECT_EQ(r.trials, 0u);
  EXPECT_EQ(report.results.size(), property_names("factorization").size());
}

TEST(Proptest, UnknownSuite) {
  ProptestConfig config;
  config.suite = "nope";
  EXPECT_THROW(run_proptest(config), UnknownSuite);
}

TEST(Proptest, MatrixSuiteSeed42) {
  ProptestConfig config;
  config.suite = "matrix";
  config.trials = 200;
  config.seed = 42;
  config.m = 2;
  config.n = 2;
  config.q = 4;
  auto report = run_proptest(config);
  bool saw_ber = false;
  for (const auto& r : report.results) {
    EXPECT_EQ(r.failed, 0u) << r.name << ": " << r.counterexample->dump();
    if (r.name == "ber_multiplicativity") {
      saw_ber = true;
      EXPECT_EQ(r.passed, 200u);
    }
  }
  EXPECT_TRUE(saw_ber);
}

TEST(Proptest, Deterministic) {
  ProptestConfig config;
  config.trials = 5;
  config.seed = 123;
  EXPECT_EQ(run_proptest(config).to_json().dump(), run_proptest(config).to_json().dump());
}

TEST(Proptest, OnlyFilter) {
  ProptestConfig config;
  config.suite = "all";
  config.trials = 3;
  config.only = {"chart_down_up", "gl_smooth_at_identity"};
  auto report = run_proptest(config);
  ASSERT_EQ(report.results.size(), 2u);
  EXPECT_TRUE(report.pass());
}

TEST(Proptest, EverySuiteSmallProfiles) {
  for (auto [m, n, r, s] : {std::array<std::size_t, 4>{1, 1, 1, 0}, {1, 1, 0, 1}, {2, 1, 1, 1}, {2, 0, 1, 0}}) {
    ProptestConfig config;
    config.trials = 10;
    config.seed = 5;
    config.m = m;
    config.n = n;
    config.r = r;
    config.s = s;
    config.q = 3;
    auto report = run_proptest(config);
    for (const auto& res : report.results)
      EXPECT_EQ(res.failed, 0u) << res.name << " at (" << m << "," << n << "," << r << "," << s
                                << "): " << res.counterexample->dump();
  }
}
