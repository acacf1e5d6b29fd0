#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cyclecalc {

struct Check {
    std::string name;
    bool passed = false;
    std::string lhs;
    std::string rhs;
    std::string context;
};

struct Report {
    std::pair<int, int> genus_range{1, 5};
    std::pair<int, int> gonality_range{2, 7};
    std::vector<Check> checks;

    std::size_t passed() const;
    std::size_t failed() const;
};

/// {version, genus_range, gonality_range, checks, passed, failed} in that order.
std::string to_json(const Report& r);
/// Inverse of to_json; rejects other versions and inconsistent counts.
Report report_from_json(const std::string& text);
/// One "PASS|FAIL name [context]: lhs | rhs" line per check plus a summary line.
std::string to_text(const Report& r);

}  // namespace cyclecalc
