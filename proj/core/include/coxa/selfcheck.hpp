#pragma once

#include <string>
#include <vector>

namespace coxa {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Validation of the permutation oracle and the core algorithms at small
/// ranks: Coxeter relations, inversion-count length against BFS distance,
/// brick identities and exchange rules in the group, and canonical form
/// round trips against enumeration.
std::vector<CheckResult> run_selfcheck();

}  // namespace coxa
