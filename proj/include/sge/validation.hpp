#ifndef SGE_VALIDATION_HPP
#define SGE_VALIDATION_HPP

#include <string>
#include <vector>

namespace sge {

struct CheckResult {
  std::string name;
  bool pass = false;
  double metric = 0.0;  // the residual/deviation the check bounds
  double bound = 0.0;   // the bound it must stay below
  std::string detail;
};

/// The library's invariant suite: conservation laws on integrated
/// trajectories, closed-form vs numeric agreement, the three-route
/// negativity equivalence, steady-state cross-route agreement,
/// G-independence and channel-exchange symmetry. Informational entries
/// carry pass = true and a descriptive detail.
std::vector<CheckResult> run_validation();

}  // namespace sge

#endif
