#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lcurve::cli {

struct SuiteResult {
  std::string module;
  std::string check;
  long long passed = 0;
  long long total = 0;

  bool ok() const { return passed == total; }
};

// Scaled-down invariant suites for every module.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, int samples);

}  // namespace lcurve::cli
