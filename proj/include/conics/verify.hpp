#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conics/euler.hpp"

namespace conics {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // key=value pairs
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct SuiteOptions {
  std::int64_t prime_bound = kDefaultPrimeBound;
  std::int64_t samples = 100'000;  // random trials where a suite samples
  std::uint64_t seed = 20240601;
  unsigned workers = 1;
};

// hilbert, detectors, densities, assembly, selberg.
const std::vector<std::string>& suite_names();

// Runs the named invariant suite. Throws DomainError for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace conics
