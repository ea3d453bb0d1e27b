#pragma once

#include <string>
#include <vector>

namespace ica {

// A single rule violation. Violations are data, not exceptions: structurally
// broken input is reported in full rather than aborted at the first problem.
struct Violation {
    std::string rule;    // stable machine-readable code, e.g. "shared-code"
    std::string message; // human-readable, names the offending ids

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }

    void add(std::string rule, std::string message) {
        violations.push_back({std::move(rule), std::move(message)});
    }

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

} // namespace ica
