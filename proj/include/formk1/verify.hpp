#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace formk1 {

/// Outcome of one randomized property suite.
struct SuiteResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  nlohmann::json to_json() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;
inline constexpr int kSuiteCount = 11;

/// Suite names in id order (ids are 1-based).
const std::vector<std::string>& suite_names();

/// Runs suite `id` with its own generator seeded from `seed` and the id,
/// so results do not depend on which other suites run or in what order.
SuiteResult run_suite(int id, std::uint64_t seed);

/// All suites, concurrently when `parallel`; results are in id order.
std::vector<SuiteResult> run_all(std::uint64_t seed, bool parallel = true);

nlohmann::json report_json(const std::vector<SuiteResult>& results, std::uint64_t seed);

}  // namespace formk1
