#include <gtest/gtest.h>

#include "ballspec/errors.hpp"
#include "ballspec/verify.hpp"

using namespace ballspec;

namespace {

VerifyConfig small_config() {
  VerifyConfig cfg;
  cfg.n_max = 2;
  cfg.m_max = 2;
  cfg.grid = {24, 16, 32};
  cfg.fd_samples = 40;
  return cfg;
}

TEST(Verify, SuitesPass) {
  for (auto suite : kSuites) {
    const auto report = run_verification(suite, small_config());
    EXPECT_FALSE(report.checks.empty()) << suite;
    for (const auto& c : report.checks) {
      EXPECT_TRUE(c.passed) << c.suite << "/" << c.name << " value=" << c.value
                            << " tol=" << c.tolerance << " " << c.detail;
    }
  }
}

TEST(Verify, ReportsAreDeterministic) {
  const auto a = run_verification("solver", small_config());
  const auto b = run_verification("solver", small_config());
  EXPECT_EQ(report_to_text(a), report_to_text(b));
  EXPECT_EQ(report_to_csv(a), report_to_csv(b));
  EXPECT_EQ(report_to_json(a).dump(), report_to_json(b).dump());
}

TEST(Verify, UnknownSuite) {
  EXPECT_FALSE(is_suite("nope"));
  EXPECT_TRUE(is_suite("eigen"));
  EXPECT_THROW(run_verification("nope", small_config()), DomainError);
}

TEST(Verify, FailuresCounted) {
  VerifyReport r;
  r.checks.push_back({"s", "a", true, 0, 1, ""});
  r.checks.push_back({"s", "b", false, 2, 1, ""});
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures(), 1u);
  EXPECT_NE(report_to_csv(r).find("s,b"), std::string::npos);
}

}  // namespace
