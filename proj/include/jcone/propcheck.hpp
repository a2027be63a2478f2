#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jcone/jstruct.hpp"

namespace jcone {

struct PropertyReport {
  std::string property_id;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  /// Smallest slack seen; a trial passes iff its slack is >= 0.
  double worst_margin = 0.0;
  std::uint64_t seed = 0;
  /// Present iff failures > 0.
  std::optional<nlohmann::json> counterexample;

  bool passed() const { return failures == 0; }
};

nlohmann::json to_json(const PropertyReport& r);
/// One canonical JSON object without a trailing newline.
std::string to_json_line(const PropertyReport& r);

enum class Quantifier {
  kForAll,  // every trial must pass
  kExists,  // at least one trial must produce a witness
  kMostly,  // at least 90% of trials must produce a witness
};

struct PropertyInfo {
  std::string id;
  std::string suite;
  /// "<module>#<k>" for the k-th listed invariant of a module, otherwise a
  /// short tag naming the operation contract it exercises.
  std::string source;
  Quantifier quantifier = Quantifier::kForAll;
};

const std::vector<PropertyInfo>& property_registry();
/// powers, order, geometry, means, inequalities, quaternion, all.
const std::vector<std::string>& suite_ids();

struct SuiteConfig {
  std::string suite_id = "all";
  Signature signature{1, 1};
  Field field = Field::kReal;
  Index dim = 2;
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  /// Tolerance for properties whose tolerance is not pinned individually.
  double tol = 1e-8;
  /// Test hook applied to the weight of every mean the suites evaluate;
  /// when set, means are taken as geodesic(A, B, mean_weight(t)).
  std::function<double(double)> mean_weight;
};

/// Runs every property of the suite (all suites for "all") in registry order.
/// Throws kUnknownSuite, and kInvalidArgument when dim != p + q. The
/// quaternion suite always runs over H.
std::vector<PropertyReport> run_suite(const SuiteConfig& config);
/// As above, handing each report to `sink` as soon as it is complete.
std::vector<PropertyReport> run_suite(const SuiteConfig& config,
                                      const std::function<void(const PropertyReport&)>& sink);

bool all_passed(const std::vector<PropertyReport>& reports);

}  // namespace jcone
