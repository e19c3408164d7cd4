// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <iostream>

#include "easycat/acceptance.hpp"

int main() {
  easycat::AcceptanceOptions opt;
  opt.on_result = [](const easycat::CriterionResult& r) {
    std::cout << easycat::format_result(r) << std::endl;
  };
  const auto results = easycat::run_acceptance(opt);
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
