#pragma once

// The acceptance suite: one pass/fail result per reproduced classification
// or count identity.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace easycat {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  // Run only these criterion ids (all when empty).
  std::vector<int> only;
  // Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

// "[PASS] 3 classical six ... (1.2 s)" style line.
std::string format_result(const CriterionResult& r);

}  // namespace easycat
