#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "geotree/oracle.hpp"

namespace geotree {

struct SuiteOptions {
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::optional<int> seeds;  // seeds 1..seeds
  std::uint64_t budget = kDefaultBudget;
  /// Called with each case record as soon as it is finished.
  std::function<void(const nlohmann::json&)> on_case;
};

struct SuiteReport {
  std::string suite;
  std::vector<nlohmann::json> cases;
  /// Findings worth a human look that are not failures.
  std::vector<nlohmann::json> notable;
  int passed = 0;
  int failed = 0;
  int unknown = 0;

  bool ok() const { return failed == 0 && unknown == 0; }
  nlohmann::json summary() const;
};

/// Names accepted by run_suite, in acceptance order.
const std::vector<std::string>& suite_names();

/// Runs a named verification suite. Unknown names throw std::invalid_argument.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace geotree
