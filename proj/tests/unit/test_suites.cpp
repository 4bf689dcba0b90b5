#include <gtest/gtest.h>

#include "gfd/errors.hpp"
#include "gfd/suites.hpp"

using namespace gfd;

TEST(Suites, EveryNamedSuitePassesOnItsCatalog) {
  for (const auto& name : suite_names()) {
    SuiteResult r = run_suite(name, 3);
    EXPECT_TRUE(r.passed()) << name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.checked, 0) << name;
    EXPECT_LT(r.seconds, 60.0) << name;
  }
}

TEST(Suites, SeedDeterminesTheResult) {
  SuiteResult a = run_suite("am", 11), b = run_suite("am", 11);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.rings, b.rings);
}

TEST(Suites, RingOverrideAndSkips) {
  SuiteResult r = run_suite("remark1", 1, {Ring::integers(), Ring::zmod(2, 2)});
  EXPECT_EQ(r.rings, std::vector<std::string>{"Z/4"});
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_NE(r.notes[0].find("needs a finite ring"), std::string::npos);
  EXPECT_TRUE(r.passed());
}

TEST(Suites, UnknownNameIsAValidationError) {
  EXPECT_THROW(run_suite("no-such-suite", 1), ValidationError);
  EXPECT_THROW(suite_claim("no-such-suite"), ValidationError);
}
