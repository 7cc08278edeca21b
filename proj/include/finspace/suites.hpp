#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace finspace {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  /// Instances generated; 1 for a worked example.
  std::size_t instances = 0;
  /// Instances where the implication under test had a non-vacuous premise.
  std::size_t informative = 0;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool passed() const;
};

/// Worked examples replayed from the bundled fixtures: ex2_3, ex2_5, exW,
/// ex2_8, ex2_12, ex2_16, ex3_9, ex_postA, ex4_2, ex4_3.
const std::vector<std::string>& example_case_names();
/// Throws Error for an unknown name. BudgetExceeded propagates; any other
/// library error becomes a failed check.
SuiteResult run_example_case(std::string_view name);

struct PropertySuiteInfo {
  std::string name;
  std::string description;
  std::size_t default_instances;
  std::size_t max_size;
};

const std::vector<PropertySuiteInfo>& property_suites();
/// Randomized suite. Instance i draws from its own generator seeded from
/// (seed, suite name, i), so results do not depend on evaluation order.
/// `instances` = 0 selects the default corpus size. Every counterexample is
/// a failed check carrying a dump of the instance (the first five are kept).
SuiteResult run_property_suite(std::string_view name, std::uint64_t seed, std::size_t instances = 0);

}  // namespace finspace
