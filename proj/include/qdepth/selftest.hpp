#pragma once

#include <string>
#include <vector>

namespace qdepth {

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
};

// Built-in consistency suites: the binomial identities, elementary binomial
// laws, formula-vs-enumeration equivalence, and (full only) the b-sum
// positivity sweeps and edge-value cross checks. Output is deterministic.
//
// quick: identity bounds <= 15, enumeration grid n*t <= 9
// full:  identity bounds <= 30, enumeration grid n*t <= 12, all sweeps
std::vector<SuiteResult> selftest(bool full);

}  // namespace qdepth
