#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace extremal {

struct Check {
  std::string name;
  double measured = 0.0;
  double reference = 0.0;
  double error = 0.0;      // the quantity compared against tolerance
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct SuiteResult {
  std::string name;
  std::string summary;
  std::vector<Check> checks;

  bool passed() const;
};

/// Names accepted by run_suite, in acceptance order.
const std::vector<std::string>& suite_names();

/// Runs one verification suite. Throws UsageError for an unknown name.
SuiteResult run_suite(std::string_view name, std::uint64_t seed = 20240601);

}  // namespace extremal
