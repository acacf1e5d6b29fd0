#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclecalc/report.hpp"

namespace cyclecalc {

struct VerifyOptions {
    int genus_min = 1;
    int genus_max = 5;
    int gonality_min = 2;
    int gonality_max = 7;
    bool inject_fault = false;  ///< appends one deliberately failing check
    bool parallel = true;
};

/// Runs every identity suite over the ranges. Check order is fixed by the
/// suite order, whether or not the suites run concurrently.
Report verify_all(const VerifyOptions& opts);

/// DSL expressions with their exact expected renderings.
struct IdentityRow {
    std::string name;
    std::string expr;
    int genus;
    std::optional<int> gonality;
    std::string level;
    std::string expected;
};
const std::vector<IdentityRow>& identity_table();

}  // namespace cyclecalc
