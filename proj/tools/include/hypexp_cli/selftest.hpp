#pragma once

#include <string>
#include <vector>

namespace hypexp::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Quick exhaustive property checks across all modules.
std::vector<CheckResult> run_selftest(unsigned workers, unsigned long long seed);

}  // namespace hypexp::cli
