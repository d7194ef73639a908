#include <gtest/gtest.h>

#include <set>

#include "rigidlab/claims.hpp"

namespace {

using namespace rigidlab;

TEST(Harness, RegistryCoversEveryAcceptanceCriterion) {
  std::set<std::string> registered;
  for (const auto& c : claim_registry()) EXPECT_TRUE(registered.insert(c.id).second) << "duplicate " << c.id;
  std::set<std::string> required;
  std::set<int> numbers;
  for (const auto& crit : acceptance_criteria()) {
    numbers.insert(crit.number);
    for (const auto& id : crit.claims) required.insert(id);
  }
  EXPECT_EQ(numbers, (std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  std::vector<std::string> missing;
  std::set_difference(required.begin(), required.end(), registered.begin(), registered.end(),
                      std::back_inserter(missing));
  EXPECT_TRUE(missing.empty()) << "criteria reference unregistered claims";
  for (const char* id : {"thm-6.1", "prop-8.1", "prop-8.2", "lemma-2.3-equivalence", "thm-4.1", "cor-4.3",
                         "thm-7.3", "example-7.4", "lemma-6.2-oracle"})
    EXPECT_TRUE(registered.count(id)) << id;
}

TEST(Harness, UnknownClaimIsUsageError) {
  EXPECT_THROW(find_claim("thm-9.9"), UsageError);
  EXPECT_THROW(run_claim(find_claim("thm-7.1"), 0, 0), UsageError);
}

TEST(Harness, ReportShapeAndOrdering) {
  const auto o = run_claim(find_claim("cross-sum-equality"), 5, 3, 2);
  const auto& r = o.report;
  EXPECT_EQ(r["schema"], 1);
  EXPECT_EQ(r["claim"], "cross-sum-equality");
  EXPECT_EQ(r["verdict"], "pass");
  EXPECT_EQ(r["summary"]["instances"], 5);
  std::vector<std::string> keys;
  for (const auto& i : r["instances"]) keys.push_back(i["key"]);
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_FALSE(r.contains("timestamp"));
  EXPECT_EQ(o.exit_code(), 0);
}

TEST(Harness, ThreadCountDoesNotChangeReports) {
  const auto& c = find_claim("lemma-7.5");
  EXPECT_EQ(run_claim(c, 9, 2, 1).report.dump(), run_claim(c, 9, 2, 3).report.dump());
}

TEST(Harness, ExceptionsBecomeFailures) {
  Claim broken{"broken", "throws", "none", [](int) {
                 return std::vector<Instance>{
                     {"x", [](const RunContext&) -> InstanceResult { throw ParamError("boom"); }},
                     {"y", [](const RunContext&) { return InstanceResult{Status::warn, Json::object()}; }}};
               }};
  const auto o = run_claim(broken, 0, 1, 2);
  EXPECT_EQ(o.failed, 1U);
  EXPECT_EQ(o.warned, 1U);
  EXPECT_EQ(o.verdict(), Status::fail);
  EXPECT_EQ(o.exit_code(), 1);
  EXPECT_EQ(o.report["instances"][0]["data"]["error"], "boom");
}

TEST(Harness, WarnOnlyRunExitsZero) {
  Claim soft{"soft", "warns", "none", [](int) {
               return std::vector<Instance>{
                   {"x", [](const RunContext&) { return InstanceResult{Status::warn, Json::object()}; }}};
             }};
  const auto o = run_claim(soft, 0, 1, 1);
  EXPECT_EQ(o.verdict(), Status::warn);
  EXPECT_EQ(o.exit_code(), 0);
}

}  // namespace
