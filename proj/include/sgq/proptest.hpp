#pragma once

// Seeded property-test harness over the algebraic laws of every module.
//
// Each (property, trial) pair draws from its own generator stream derived
// from (seed, property id, trial index), so reports do not depend on the
// order in which trials run.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sgq {

struct ProptestConfig {
  std::string suite = "all";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  // Profile and size bounds: ambient (m|n), subspace (r|s), odd generators q.
  std::size_t m = 2, n = 2, r = 1, s = 1, q = 4;
  /// When non-empty, only properties with these names run.
  std::vector<std::string> only;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<nlohmann::json> counterexample;  // first failure
};

struct ProptestReport {
  ProptestConfig config;
  std::vector<PropertyResult> results;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// kernel, matrix, factorization, chart, action, smoothness, all.
const std::vector<std::string>& suite_names();
/// Property names of one suite, in execution order.
std::vector<std::string> property_names(const std::string& suite);

/// Throws UnknownSuite; std::invalid_argument on an invalid profile or q > 64.
ProptestReport run_proptest(const ProptestConfig& config);

}  // namespace sgq
