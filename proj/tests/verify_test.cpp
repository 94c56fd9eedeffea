#include "aqc/verify.hpp"

#include <gtest/gtest.h>

namespace aqc {
namespace {

void expect_all_pass(const std::vector<CheckResult>& results) {
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Verify, ParseScope) {
  EXPECT_EQ(parse_scope("gf"), VerifyScope::kGf);
  EXPECT_EQ(parse_scope("all"), VerifyScope::kAll);
  EXPECT_FALSE(parse_scope("everything").has_value());
}

TEST(Verify, EachScopePasses) {
  for (auto scope : {VerifyScope::kOracle, VerifyScope::kRecurrences, VerifyScope::kGf,
                     VerifyScope::kPermanent, VerifyScope::kMulti}) {
    expect_all_pass(run_verification(scope, {}));
  }
}

TEST(Verify, LimitsAreHonoured) {
  VerifyLimits limits;
  limits.n_max = 4;
  const auto results = run_verification(VerifyScope::kOracle, limits);
  EXPECT_EQ(results.size(), 5u);  // n = 0..4
  expect_all_pass(results);
}

TEST(Verify, OverCapIsReportedAsFailure) {
  VerifyLimits limits;
  limits.order = 5;  // below 2q + 2 for q = 2
  limits.q_max = 2;
  const auto results = run_verification(VerifyScope::kGf, limits);
  bool any_failed = false;
  for (const auto& r : results) any_failed = any_failed || !r.passed;
  EXPECT_TRUE(any_failed);
}

}  // namespace
}  // namespace aqc
