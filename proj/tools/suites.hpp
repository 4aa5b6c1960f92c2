#ifndef KGC_TOOLS_SUITES_HPP
#define KGC_TOOLS_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgc/cohomology.hpp"
#include "kgc/graph.hpp"

namespace kgc::cli {

struct SuiteOptions {
  int n = 3;
  TypePolicy policy = TypePolicy::ascending();
  /// Unset means both isolated-vertex modes.
  std::optional<IsolatedMode> mode;
  /// Unset means the suite's own default dimensions.
  std::optional<int> dim;
  int length = 5;
  int trials = 25;
  std::uint64_t seed = 1;
};

struct SuiteResult {
  bool passed = true;
  int checks = 0;
  /// First failing case, with enough data (seed, trial) to replay it.
  nlohmann::json counterexample;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

SuiteResult verify_d_squared(const SuiteOptions& options);
SuiteResult verify_homotopy(const SuiteOptions& options);
SuiteResult verify_schouten(const SuiteOptions& options);
SuiteResult verify_correspondence(const SuiteOptions& options);
SuiteResult verify_amitsur_levitzki(const SuiteOptions& options);
SuiteResult verify_wheels(const SuiteOptions& options);

}  // namespace kgc::cli

#endif  // KGC_TOOLS_SUITES_HPP
