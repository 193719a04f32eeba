#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Built-in verification checks: each check pins a reference operating point or
// closed-form identity of the chain model and verifies the computed value at a
// fixed tolerance. The CLI `validate` subcommand and the acceptance test
// driver both run these.

namespace squidnoise {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::string> details;  // computed-vs-expected lines
};

inline constexpr int k_num_builtin_checks = 11;

// Runs one check by id (1-based). Throws std::out_of_range for unknown ids.
CheckResult run_builtin_check(int id);

// Runs every check in order.
std::vector<CheckResult> run_builtin_checks();

// Prints one PASS/FAIL line per check (details indented below it) and a
// summary; returns the number of failed checks.
int print_check_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace squidnoise
