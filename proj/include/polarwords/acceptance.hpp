#pragma once

// End-to-end acceptance checks, shared by `polarwords verify-all` and the
// acceptance test binary. Each criterion runs its own computations from
// scratch and is timed against a fixed budget.

#include <functional>
#include <string>
#include <vector>

namespace polarwords {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool ok = false;        // all checks held
  double seconds = 0.0;
  double budget = 0.0;    // seconds
  std::string detail;

  bool passed() const { return ok && seconds <= budget; }
  /// One line: "PASS [3] case tables (0.41s / 10s): ..."
  std::string line() const;
};

constexpr int kCriterionCount = 9;

CriterionResult run_criterion(int id, int threads = 1);

std::vector<CriterionResult> run_all_criteria(int threads = 1,
                                              const std::function<void(const CriterionResult&)>& on_result = {});

// Fixtures printed alongside the theory, as data.

struct CaseMembers {
  int case_number;
  std::vector<std::string> words;
};

/// The length-4 words of each case.
const std::vector<CaseMembers>& length4_case_table();

struct LabeledPoint {
  char label;
  const char* basis;  // two rows of F_2^4 joined by ';'
};

/// The fifteen points A..O of the rank-2 polar space and its fifteen lines.
const std::vector<LabeledPoint>& rank2_point_table();
const std::vector<std::string>& rank2_line_table();

}  // namespace polarwords
