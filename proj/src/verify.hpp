#pragma once

#include <string>
#include <vector>

namespace stringspec {

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the full acceptance suite (deterministic, < 60 s). One result per
/// criterion; `detail` carries the measured quantities.
std::vector<CriterionResult> run_acceptance();

} // namespace stringspec
