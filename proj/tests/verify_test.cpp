#include <gtest/gtest.h>

#include "prset/verify.hpp"

using namespace prset;

namespace {

VerifyConfig small_config() {
  VerifyConfig cfg;
  cfg.window = 1500;
  return cfg;
}

}  // namespace

class SuiteRuns : public ::testing::TestWithParam<std::size_t> {};

TEST_P(SuiteRuns, NoViolations) {
  const auto& entry = all_suites().at(GetParam());
  const auto report = run_suite(entry, small_config());
  EXPECT_GT(report.checks, 0u) << entry.name;
  EXPECT_EQ(report.violations, 0u) << entry.name << ": " << (report.examples.empty() ? "" : report.examples.front());
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SuiteRuns, ::testing::Range<std::size_t>(0, 15),
                         [](const auto& info) { return std::string(all_suites()[info.param].id); });

TEST(Suites, RegistryIsComplete) {
  ASSERT_EQ(all_suites().size(), 15u);
  for (std::size_t i = 0; i < all_suites().size(); ++i) EXPECT_EQ(all_suites()[i].id, "T" + std::to_string(i + 1));
}

TEST(Suites, Deterministic) {
  const auto cfg = small_config();
  const auto a = run_suite(all_suites()[7], cfg);
  const auto b = run_suite(all_suites()[7], cfg);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.violations, b.violations);
}

TEST(Suites, TinyCapsReportUndecided) {
  VerifyConfig cfg = small_config();
  cfg.lcm_cap = 4;
  const auto r = suites::step_by_step(cfg);
  EXPECT_GT(r.undecided, 0u);
  EXPECT_EQ(r.violations, 0u);
}

TEST(RandomRule, CoversEveryFamily) {
  std::mt19937_64 rng(5);
  std::vector<bool> seen(std::variant_size_v<SetRule>, false);
  for (int t = 0; t < 400; ++t) seen[random_rule(rng, 100).index()] = true;
  for (std::size_t i = 0; i < seen.size(); ++i) EXPECT_TRUE(seen[i]) << i;
}
