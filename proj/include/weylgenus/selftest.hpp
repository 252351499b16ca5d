#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace genus {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;   // deterministic, no timings
  double seconds = 0.0; // reported separately, never serialized
};

struct SelftestOptions {
  std::uint64_t seed = 12345;
  int threads = 0;  // 0: GENUS_THREADS env / hardware
};

// Runs the full acceptance suite; one result per criterion (see README).
std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts = {});

// Stable JSON for the result matrix; excludes wall times so reruns under any
// thread count are byte-identical.
std::string selftest_json(const std::vector<CriterionResult>& results,
                          std::uint64_t seed);

}  // namespace genus
