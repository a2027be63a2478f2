#include <gtest/gtest.h>

#include <set>

#include "jcone/propcheck.hpp"

namespace jcone {
namespace {

SuiteConfig means_config() {
  SuiteConfig c;
  c.suite_id = "means";
  c.field = Field::kComplex;
  c.signature = {1, 1};
  c.dim = 2;
  c.trials = 200;
  c.seed = 42;
  return c;
}

TEST(Propcheck, ZeroTrialsIsEmptyPass) {
  SuiteConfig c = means_config();
  c.trials = 0;
  for (const auto& r : run_suite(c)) {
    EXPECT_EQ(r.trials, 0u);
    EXPECT_EQ(r.failures, 0u);
    EXPECT_FALSE(r.counterexample.has_value());
  }
}

TEST(Propcheck, MeansSuitePasses) {
  const auto reports = run_suite(means_config());
  EXPECT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << to_json_line(r);
  }
  EXPECT_TRUE(all_passed(reports));
}

TEST(Propcheck, BrokenMeanIsCaught) {
  SuiteConfig c = means_config();
  c.mean_weight = [](double t) { return -t; };
  const auto reports = run_suite(c);
  EXPECT_FALSE(all_passed(reports));
  for (const auto& r : reports) {
    if (r.passed()) continue;
    ASSERT_TRUE(r.counterexample.has_value()) << r.property_id;
    EXPECT_TRUE(r.counterexample->contains("trial_seed") || r.counterexample->contains("witnesses"));
  }
}

TEST(Propcheck, Deterministic) {
  SuiteConfig c = means_config();
  c.trials = 30;
  const auto a = run_suite(c), b = run_suite(c);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(to_json_line(a[k]), to_json_line(b[k]));
}

TEST(Propcheck, StreamingMatchesBatch) {
  SuiteConfig c = means_config();
  c.trials = 10;
  std::vector<std::string> streamed;
  const auto batch = run_suite(c, [&](const PropertyReport& r) { streamed.push_back(to_json_line(r)); });
  ASSERT_EQ(streamed.size(), batch.size());
  for (std::size_t k = 0; k < batch.size(); ++k) EXPECT_EQ(streamed[k], to_json_line(batch[k]));
}

TEST(Propcheck, RegistryCoversInvariants) {
  std::set<std::string> ids, sources;
  for (const auto& p : property_registry()) {
    EXPECT_TRUE(ids.insert(p.id).second) << "duplicate id " << p.id;
    if (p.source.find('#') != std::string::npos) {
      EXPECT_TRUE(sources.insert(p.source).second) << "duplicate source " << p.source;
    }
    EXPECT_NE(std::find(suite_ids().begin(), suite_ids().end(), p.suite), suite_ids().end());
  }
  std::set<std::string> expected;
  for (int k = 1; k <= 5; ++k) expected.insert("jcalc#" + std::to_string(k));
  for (int k = 1; k <= 4; ++k) expected.insert("order#" + std::to_string(k));
  for (int k = 1; k <= 3; ++k) expected.insert("geometry#" + std::to_string(k));
  for (int k = 1; k <= 12; ++k) expected.insert("means#" + std::to_string(k));
  for (const char* s : {"matcore#1", "matcore#4", "scalars#1", "scalars#3"}) expected.insert(s);
  EXPECT_EQ(sources, expected);
}

TEST(Propcheck, Errors) {
  SuiteConfig c = means_config();
  c.suite_id = "nope";
  try {
    run_suite(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownSuite);
  }
  c = means_config();
  c.dim = 3;
  EXPECT_THROW(run_suite(c), Error);
}

TEST(Propcheck, JsonLineFormat) {
  SuiteConfig c = means_config();
  c.trials = 5;
  for (const auto& r : run_suite(c)) {
    const auto j = nlohmann::json::parse(to_json_line(r));
    for (const char* key : {"property_id", "trials", "failures", "worst_margin", "seed"}) {
      EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["failures"].get<std::uint64_t>() == 0, j["counterexample"].is_null());
    EXPECT_EQ(to_json_line(r).find('\n'), std::string::npos);
  }
}

}  // namespace
}  // namespace jcone
