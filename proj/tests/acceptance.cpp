#include <cstdint>
#include <cstdio>
#include <cstring>

#include "cantorv/suites.hpp"

// Runs the full batch verification suite and prints one line per
// criterion. Pass --quick for the reduced sample sizes.
int main(int argc, char** argv) {
  bool full = true;
  uint64_t seed = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) full = false;
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      seed = std::strtoull(argv[++i], nullptr, 10);
  }
  int failed = 0;
  for (const auto& r : cantorv::run_acceptance(full, seed)) {
    std::printf("criterion %2d %-40s %s: %s\n", r.id, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  return failed ? 1 : 0;
}
