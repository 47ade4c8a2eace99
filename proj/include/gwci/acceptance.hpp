#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gwci {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

constexpr int acceptance_criterion_count = 12;

// Exceptions inside a criterion are reported as a failure, never propagated.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(std::optional<int> only = std::nullopt);

// "PASS [01] quintic counts n_1..n_4" followed by ": detail" when present.
std::string format_result(const CriterionResult &r);

} // namespace gwci
