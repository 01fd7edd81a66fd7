#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "formk1/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = formk1::kDefaultSeed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  auto start = std::chrono::steady_clock::now();
  auto results = formk1::run_all(seed);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("criterion %d: %s %s (%zu cases", r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.cases);
    if (!r.passed) std::printf(", %zu failures; first: %s", r.failures, r.first_failure.c_str());
    std::printf(")\n");
    if (!r.passed) ++failed;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%d passed in %.1fs (seed %llu)\n", formk1::kSuiteCount - failed, formk1::kSuiteCount, secs,
              static_cast<unsigned long long>(seed));
  return failed == 0 ? 0 : 1;
}
