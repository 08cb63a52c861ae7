#include <gtest/gtest.h>

#include "hpq/errors.hpp"
#include "hpq/verify.hpp"

using namespace hpq;

namespace {

const CheckResult* find(const VerifyReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(Verify, EmbeddingSuitePasses) {
  const VerifyReport r = run_verify("embedding", Signature(2, 1), 7);
  EXPECT_TRUE(r.passed());
  const CheckResult* pull = find(r, "pullback_isometry");
  ASSERT_NE(pull, nullptr);
  EXPECT_LE(pull->max_residual, 1e-10);
  EXPECT_GT(pull->cases, 0);
}

TEST(Verify, GeodesicsSuiteIncludesPiLength) {
  const VerifyReport r = run_verify("geodesics", Signature(1, 2), 1);
  EXPECT_TRUE(r.passed());
  const CheckResult* pi = find(r, "timelike_length_pi");
  ASSERT_NE(pi, nullptr);
  EXPECT_TRUE(pi->passed);
  EXPECT_FALSE(pi->skipped);
}

TEST(Verify, AllSuitesHigherSignature) {
  const VerifyReport r = run_verify("all", Signature(3, 2), 1);
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed || c.skipped) << c.name << " " << c.note;
}

TEST(Verify, SameSeedSameReport) {
  const Json a = to_json(run_verify("isometries", Signature(2, 1), 5));
  const Json b = to_json(run_verify("isometries", Signature(2, 1), 5));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Verify, SkipsChecksWithoutCases) {
  const VerifyReport r = run_verify("geodesics", Signature(2, 0), 1);
  EXPECT_TRUE(r.passed());
  const CheckResult* pi = find(r, "timelike_length_pi");
  ASSERT_NE(pi, nullptr);
  EXPECT_TRUE(pi->skipped || pi->passed);
}

TEST(Verify, UnknownSuiteThrows) {
  EXPECT_THROW(run_verify("nothing", Signature(2, 1), 1), InvalidParameterError);
}

TEST(Verify, ReportShape) {
  const Json j = to_json(run_verify("submanifolds", Signature(2, 1), 3));
  EXPECT_EQ(j.at("schema_version"), 1);
  EXPECT_EQ(j.at("suite"), "submanifolds");
  EXPECT_TRUE(j.at("summary").contains("failed"));
  EXPECT_EQ(j.at("checks").size(), j.at("summary").at("checks").get<std::size_t>());
}
