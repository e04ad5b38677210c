// Runs the randomized property suites and requires a clean sheet.

#include <gtest/gtest.h>

#include <string>

#include "property_suites.hpp"

namespace {

using fpinv_test::SuiteResult;

void expect_clean(const SuiteResult& res, int min_cases) {
  EXPECT_GE(res.cases, min_cases) << res.name;
  std::string detail;
  for (const std::string& d : res.details) detail += "\n  " + d;
  EXPECT_EQ(res.failures, 0) << res.name << detail;
}

TEST(Properties, RootAdjunction) {
  expect_clean(fpinv_test::suite_root_adjunction(), 200);
}

TEST(Properties, RootComposition) {
  expect_clean(fpinv_test::suite_root_composition(), 200);
}

TEST(Properties, GeneratingSets) {
  expect_clean(fpinv_test::suite_generating_sets(), 200);
}

TEST(Properties, Skoda) { expect_clean(fpinv_test::suite_skoda(), 200); }

TEST(Properties, NuNesting) {
  expect_clean(fpinv_test::suite_nu_nesting(), 200);
}

TEST(Properties, PrefixClosure) {
  expect_clean(fpinv_test::suite_prefix_closure(), 200);
}

TEST(Properties, PadicRoundTrip) {
  expect_clean(fpinv_test::suite_padic_roundtrip(), 300);
}

}  // namespace
