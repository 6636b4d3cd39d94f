#pragma once

#include <string>
#include <vector>

namespace nthderiv {

struct CheckResult {
    std::string id;
    std::string detail;
    bool passed = false;
};

// The full self-check battery: oracle equivalences for the reciprocal and
// quotient rules, base cases, identity sweeps, the recurrence/composition
// equivalence, the harmonic/partition coefficient cross-check, the ln v
// consistency check, and the partition-infrastructure check. Deterministic:
// fixed RNG seeds, fixed sweep ranges, and pinned runtime budgets.
std::vector<CheckResult> run_acceptance_checks();

}  // namespace nthderiv
