#include <gtest/gtest.h>

#include <algorithm>

#include "nil/error.hpp"
#include "nil/harness.hpp"

using namespace nil;

namespace {

SuiteOptions small(std::optional<int> n) {
  SuiteOptions o;
  o.n_max = n;
  return o;
}

}  // namespace

TEST(Harness, CatalogNamesAreUnique) {
  auto names = suite_names();
  EXPECT_GE(names.size(), 9U);
  std::sort(names.begin(), names.end());
  EXPECT_EQ(std::adjacent_find(names.begin(), names.end()), names.end());
}

TEST(Harness, EverySuitePassesAtSmallSizes) {
  for (const SuiteInfo& info : suite_catalog()) {
    SuiteOptions o;
    if (info.default_n) o.n_max = std::min(*info.default_n, 4);
    o.samples = 30;
    SuiteReport r = run_suite(info.name, o);
    EXPECT_TRUE(r.passed()) << info.name << ": " << r.to_json().dump();
    EXPECT_GT(r.cases, 0) << info.name;
  }
}

TEST(Harness, ReportsAreDeterministic) {
  for (const std::string name : {"structural-identities", "properties", "forest-equality"}) {
    SuiteOptions o = small(name == "properties" ? std::nullopt : std::optional<int>(5));
    o.samples = 40;
    json a = run_suite(name, o).to_json(false);
    o.jobs = 3;
    json b = run_suite(name, o).to_json(false);
    EXPECT_EQ(a, b) << name;
    EXPECT_FALSE(a.contains("elapsed_ms"));
  }
  SuiteOptions o = small(std::nullopt);
  o.samples = 40;
  json a = run_suite("properties", o).to_json(false);
  o.seed = 99;
  EXPECT_NE(a, run_suite("properties", o).to_json(false));
}

TEST(Harness, ReportSchema) {
  SuiteReport r = run_suite("closed-forms");
  json j = r.to_json();
  for (const char* key : {"suite", "params", "cases", "failures", "findings", "seed", "elapsed_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["seed"], kDefaultSeed);
}

TEST(Harness, ReplayReproducesAFailure) {
  // A 4-cycle passed off as a tree.
  CaseOutcome bad = replay_case("forest-equality", {"tree", "4|1-2,2-3,3-4,1-4"});
  ASSERT_EQ(bad.failures.size(), 1U);
  EXPECT_EQ(bad.failures[0].graph, "4|1-2,2-3,3-4,1-4");
  EXPECT_EQ(bad.failures[0].tag, "tree");
  CaseOutcome good = replay_case("forest-equality", {"tree", "4|1-2,2-3,3-4"});
  EXPECT_TRUE(good.failures.empty());
  EXPECT_EQ(good.data["reg"], 2);
  // Unknown tags are reported as failures, not crashes.
  EXPECT_FALSE(replay_case("closed-forms", {"nonsense", "3|1-2"}).failures.empty());
}

TEST(Harness, RejectsBadParameters) {
  EXPECT_THROW(run_suite("no-such-suite"), ParameterError);
  try {
    run_suite("oracle-equivalence", small(9));
    FAIL() << "expected a size error";
  } catch (const SizeError& e) {
    EXPECT_EQ(e.guard(), "oracle-equivalence.n_max");
  }
  EXPECT_THROW(run_suite("lower-bound", small(0)), ParameterError);
}

TEST(Harness, CacheAuditUsesTheGivenCache) {
  BettiCache cache;
  SuiteOptions o = small(4);
  o.cache = &cache;
  SuiteReport r = run_suite("cache-audit", o);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(cache.size(), 0U);
  EXPECT_GE(r.params.value("sampled", 0), 1);
}

TEST(Harness, RandomIdealsAreSeeded) {
  EXPECT_EQ(random_ideal(5, 8, 6), random_ideal(5, 8, 6));
  for (std::uint64_t s = 0; s < 50; ++s) {
    MonomialIdeal i = random_ideal(s, 8, 6);
    EXPECT_LE(i.n_vars(), 8);
    EXPECT_GE(i.n_vars(), 1);
    EXPECT_LE(i.size(), 6U);
    EXPECT_FALSE(i.is_unit());
  }
}
