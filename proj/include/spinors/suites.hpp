// Named invariant suites: deterministic, seeded property checks over the whole library.
// The acceptance runner and the command line front end both drive these.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinors {

struct CheckResult {
  std::string name;
  double residual = 0;   // measured value
  double tolerance = 0;  // pinned bound
  bool pass = false;
  std::string detail;    // extra context, e.g. a convergence ratio
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> results;
  bool passed() const;
};

// Registry order matches the acceptance criteria ordering.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs one suite; unknown names throw std::invalid_argument. The seed feeds every
// randomized generator, so equal seeds give identical reports.
SuiteReport run_suite(const std::string& name, uint64_t seed);
std::vector<SuiteReport> run_all_suites(uint64_t seed);

inline constexpr uint64_t kDefaultCheckSeed = 20250809;

}  // namespace spinors
