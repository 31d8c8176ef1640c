#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vertexid {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool checks_passed = true;
  int checks = 0;
  /// First failing check, when any.
  std::string failure;
  double elapsed_ms = 0;
  /// Zero when the criterion has no time limit of its own.
  double limit_ms = 0;

  bool within_limit() const { return limit_ms == 0 || elapsed_ms < limit_ms; }
  bool passed() const { return checks_passed && within_limit(); }
  /// "PASS  1  closed-form factorizations  (27 checks, 12 ms, limit 1000 ms)"
  std::string to_line() const;
};

/// Runs the acceptance criteria 1..10 in order. `on_result` is called after
/// each criterion finishes. Criterion 10 also enforces the time limit on the
/// whole run.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 1,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// A single criterion, 1..10. Throws InvalidInput otherwise.
CriterionResult run_criterion(int number, std::uint64_t seed = 1);

}  // namespace vertexid
