#pragma once

#include <string>
#include <vector>

namespace nld {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Quick self-test of the numerical invariants: propagator unitarity, charge
/// conservation, mode reductions, bilinear bounds, convergence orders and the
/// conformal identities. Runs in a few seconds.
std::vector<CheckResult> run_check_suite();

}  // namespace nld
