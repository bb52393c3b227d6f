// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "latcon/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = latcon::verify::kDefaultSeed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (int id = 1; id <= latcon::verify::kCriterionCount; ++id) {
    const auto r = latcon::verify::run_criterion(id, seed);
    std::printf("%s  %2d  %-50s %7.2fs / %.0fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.limit_seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of %d criteria passed\n", latcon::verify::kCriterionCount - failed,
              latcon::verify::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
