#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace bausteine {

struct GoldenOutcome {
  bool passed = false;
  std::string detail;
};

/// One historical identity or count, checked by exact reduction.
struct GoldenCase {
  std::string id;
  std::string description;
  /// Where the identity was published.
  std::string citation;
  /// The formula or figure as printed there.
  std::string source;
  std::function<GoldenOutcome()> check;
};

struct GoldenResult {
  std::string id;
  std::string description;
  std::string citation;
  std::string source;
  GoldenOutcome outcome;
};

struct GoldenReport {
  std::vector<GoldenResult> results;  ///< sorted by id
  std::size_t failures = 0;
  double seconds = 0.0;

  bool ok() const { return failures == 0; }
};

/// Reduction checks in the suite fail if they need more steps than this.
inline constexpr std::size_t kGoldenStepBound = 30;

std::vector<GoldenCase> golden_cases();

/// Runs every case (concurrently) and reports in id order.
GoldenReport run_golden();

}  // namespace bausteine
