#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cantorv {

// One verification criterion of the batch suite.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // counts, bounds and witnesses
};

// Runs the ten batch criteria. full selects the large sample sizes
// (minutes); otherwise reduced counts keep the run under a minute.
// Deterministic in seed; JF_THREADS caps the data-parallel fan-out.
std::vector<CriterionResult> run_acceptance(bool full, uint64_t seed);

}  // namespace cantorv
