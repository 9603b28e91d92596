#pragma once

#include <string>
#include <vector>

namespace holospec {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Built-in invariant suite: Kronecker identity (N = 8, 16, 40), file and
/// transform round trips, estimator equivalences, mirror symmetry and oracle
/// agreement for both setups.
std::vector<CheckResult> run_selftest();

}  // namespace holospec
