#pragma once

// The acceptance suite: one pass/fail verdict per criterion, thresholds fixed
// here. Shared by the acceptance test and `perclab verify`.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "perclab/rng.hpp"

namespace perclab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  Seed seed = 20'240'601;
  std::size_t workers = 0;      // 0: hardware concurrency
  std::vector<int> only;        // empty: every criterion
};

inline constexpr int kCriterionCount = 14;

// Runs the selected criteria in order, printing one line per criterion to
// log as it finishes when log is non-null.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream* log = nullptr);

std::string format_result(const CriterionResult& r);

}  // namespace perclab
