#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gravxs {

struct SuiteResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// Runs every invariant suite with the given seed. Deterministic: the same
// seed yields the same deviations bit for bit.
std::vector<SuiteResult> runSelfTest(std::uint64_t seed);

// One line per suite, max deviation in scientific notation, PASS/FAIL.
std::string formatSelfTestReport(const std::vector<SuiteResult>& results);

inline bool allPassed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace gravxs
