#pragma once

#include <string>
#include <vector>

namespace strata {

// One violated rule. `rule` is a stable machine-readable name, `subject`
// names the offending vertex/edge/cycle, `detail` is the human explanation.
struct Finding {
    std::string rule;
    std::string subject;
    std::string detail;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool ok() const { return findings.empty(); }

    void add(std::string rule, std::string subject, std::string detail) {
        findings.push_back({std::move(rule), std::move(subject), std::move(detail)});
    }

    void merge(const ValidationReport& other) {
        findings.insert(findings.end(), other.findings.begin(), other.findings.end());
    }
};

} // namespace strata
