#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "octowitt/verify.hpp"

namespace {

using namespace octowitt;

const VerificationReport& small_report() {
  static const VerificationReport report = run_verification(VerifyConfig{1, 5, 7});
  return report;
}

TEST(Verify, RunsEverySuiteInOrder) {
  const auto& r = small_report();
  ASSERT_EQ(r.suites.size(), suite_names().size());
  for (std::size_t i = 0; i < r.suites.size(); ++i) {
    EXPECT_EQ(r.suites[i].name, suite_names()[i]);
    EXPECT_GT(r.suites[i].checks_run, 0U) << r.suites[i].name;
  }
  const std::set<std::string> unique(suite_names().begin(), suite_names().end());
  EXPECT_EQ(unique.size(), suite_names().size());
}

TEST(Verify, OnlyThePrintedTableDefectsFail) {
  const auto& r = small_report();
  for (const auto& s : r.suites) {
    if (s.name == "witt.twistor_table_fidelity") {
      ASSERT_EQ(s.failures.size(), 1U);
      EXPECT_EQ(s.failures[0].id, "X6/g4");
      EXPECT_EQ(s.failures[0].expected, "-x2 g4");
      EXPECT_EQ(s.failures[0].actual, "+x2 g4");
    } else if (s.name == "witt.express_generator") {
      EXPECT_EQ(s.failures.size(), 7U);  // i = 1..7 at n = 1
    } else {
      EXPECT_TRUE(s.failures.empty()) << s.name;
    }
  }
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.total_failures(), 8U);
}

TEST(Verify, FailuresSortedById) {
  const SuiteResult* s = small_report().find("witt.express_generator");
  ASSERT_NE(s, nullptr);
  for (std::size_t i = 1; i < s->failures.size(); ++i) EXPECT_LE(s->failures[i - 1].id, s->failures[i].id);
  EXPECT_EQ(small_report().find("no.such.suite"), nullptr);
}

TEST(Verify, JsonIsDeterministicWithoutTimings) {
  const auto a = report_to_json(run_verification(VerifyConfig{1, 3, 11}));
  const auto b = report_to_json(run_verification(VerifyConfig{1, 3, 11}));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_FALSE(a["suites"][0].contains("wall_time_ms"));
  EXPECT_EQ(a["config"]["seed"], 11);
  EXPECT_EQ(a["passed"], false);
  const auto t = report_to_json(small_report(), true);
  EXPECT_TRUE(t["suites"][0].contains("wall_time_ms"));
}

TEST(Verify, SeedChangesSamplesNotVerdicts) {
  const auto a = run_verification(VerifyConfig{1, 3, 1});
  const auto b = run_verification(VerifyConfig{1, 3, 2});
  EXPECT_EQ(a.total_failures(), b.total_failures());
  EXPECT_EQ(a.total_checks(), b.total_checks());
}

TEST(Verify, RejectsBadConfig) {
  EXPECT_THROW(run_verification(VerifyConfig{0, 5, 1}), std::invalid_argument);
  EXPECT_THROW(run_verification(VerifyConfig{1, -1, 1}), std::invalid_argument);
}

}  // namespace
