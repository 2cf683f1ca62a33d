#include <gtest/gtest.h>

#include <sstream>

#include <ncdet/ncdet.hpp>

using namespace ncdet;

namespace {

std::string failing_checks(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks)
    if (!c.passed) os << c.suite << ": " << c.name << " [" << c.detail << "]\n";
  return os.str();
}

}  // namespace

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, PassesWithDefaults) {
  const auto report = run_verify(GetParam());
  EXPECT_FALSE(report.checks.empty());
  EXPECT_TRUE(report.passed()) << failing_checks(report);
  for (const auto& c : report.checks) EXPECT_EQ(c.suite, GetParam());
}

INSTANTIATE_TEST_SUITE_P(Verify, EverySuite, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) { return info.param; });

TEST(Verify, KnownValues) {
  VerifyConfig cfg;
  cfg.n = 3;
  const auto thm31 = run_verify("thm3_1", cfg);
  ASSERT_EQ(thm31.checks.size(), 1u);
  EXPECT_TRUE(thm31.passed());

  const auto s4 = run_verify("prop3_3");
  ASSERT_EQ(s4.checks.size(), 1u);
  EXPECT_TRUE(s4.passed());
  EXPECT_NE(s4.checks[0].detail.find("24 terms; residual 0"), std::string::npos) << s4.checks[0].detail;

  const auto newton = run_verify("thm4_2");
  EXPECT_TRUE(newton.passed());
  EXPECT_NE(newton.checks[0].detail.find("36 terms; residual 0"), std::string::npos);
}

TEST(Verify, UnknownSuiteAndGuardrails) {
  EXPECT_THROW(run_verify("thm9_9"), InputError);
  VerifyConfig big;
  big.n = 7;
  EXPECT_THROW(run_verify("thm3_1", big), CapExceeded);
  VerifyConfig k;
  k.k = 9;
  EXPECT_THROW(run_verify("thm2_3", k), CapExceeded);
}

TEST(Verify, DeterministicGivenSeed) {
  VerifyConfig cfg;
  cfg.seed = 7;
  const auto a = run_verify("thm2_7", cfg);
  const auto b = run_verify("thm2_7", cfg);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].detail, b.checks[i].detail);
  }
}

TEST(Verify, AllRunsEverySuiteInOrder) {
  const auto all = run_verify("all");
  EXPECT_TRUE(all.passed()) << failing_checks(all);
  std::vector<std::string> order;
  for (const auto& c : all.checks)
    if (order.empty() || order.back() != c.suite) order.push_back(c.suite);
  EXPECT_EQ(order, suite_names());
}

// A sign error injected into the permutation enumeration must be caught.
TEST(Verify, MutationSmokeTest) {
  for (std::size_t pair : {0u, 1u, 5u, 17u}) {
    VerifyConfig cfg;
    cfg.sdet.flip_sign_at_pair = pair;
    const auto report = run_verify("all", cfg);
    EXPECT_FALSE(report.passed()) << "flip at pair " << pair << " went unnoticed";
  }
}

TEST(Verify, ReportPrinting) {
  std::ostringstream os;
  print_report(os, run_verify("prop4_1"));
  EXPECT_NE(os.str().find("PASS prop4_1"), std::string::npos);
  EXPECT_NE(os.str().find("1/1 checks passed"), std::string::npos);
}
