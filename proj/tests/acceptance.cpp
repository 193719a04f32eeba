#include <cstdlib>
#include <iostream>
#include <vector>

#include "squidnoise/checks.hpp"

// Acceptance driver: prints one PASS/FAIL line per check and exits nonzero if
// any check failed. An optional argument selects a single check by number.
int main(int argc, char** argv) {
  using namespace squidnoise;
  std::vector<CheckResult> results;
  try {
    if (argc > 1)
      results.push_back(run_builtin_check(std::atoi(argv[1])));
    else
      results = run_builtin_checks();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return print_check_report(std::cout, results) > 0 ? 1 : 0;
}
