#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tlab {

struct SuiteFailure {
  int trial = -1;
  uint64_t seed = 0;
  std::string message;
  std::string artifact;  // loadable instance JSON when available
};

// passes + failures = trials; trials excluded by a suite's own hypothesis
// filters (non-generic tangency, unsatisfied preconditions) are reported in
// stats, not counted as trials.
struct SuiteReport {
  std::string name;
  int trials = 0;
  int passes = 0;
  std::vector<SuiteFailure> failures;
  std::vector<std::pair<std::string, std::string>> stats;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();
int default_suite_trials(const std::string& name);

// Runs the named property suite over generated instances; trials run in
// parallel over independently derived seeds.
SuiteReport verify_suite(const std::string& name, int trials, uint64_t seed);

}  // namespace tlab
