#pragma once

// Exhaustive and randomized property checks, runnable from the command line.

#include <cstdint>
#include <string>
#include <vector>

namespace resichain {

struct SuiteResult {
  std::string name;
  std::size_t pass = 0;
  std::size_t fail = 0;
  // First few failing instances.
  std::vector<std::string> failures;
};

std::vector<std::string> suite_names();

// name may carry the "lemma:" prefix. Throws UnknownSuite.
SuiteResult run_suite(const std::string& name, int max_size, std::uint64_t seed);

}  // namespace resichain
