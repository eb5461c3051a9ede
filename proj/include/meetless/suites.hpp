#pragma once

// Named, self-contained property suites. Each returns a pass/fail verdict
// with a one-line summary of what was checked; a suite fails on the first
// violation and names it.

#include <string>
#include <vector>

namespace meetless {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Suite names in run order.
std::vector<std::string> const& suite_names();

// Throws UnknownElement for an unknown name.
SuiteResult run_suite(std::string const& name);

// Frozen values computed by an independent brute-force enumeration.
inline constexpr std::size_t kRS0Count = 19702;  // |R(S(∅))|
inline constexpr std::size_t kN5Congruences = 5;
inline constexpr std::size_t kM3Congruences = 2;

}  // namespace meetless
