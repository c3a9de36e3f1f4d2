#pragma once

#include <string>
#include <vector>

#include "polypol/config.hpp"

namespace polypol {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    nlohmann::json to_json() const;
};

struct AcceptanceReport {
    RunConfig config;
    std::vector<CriterionResult> results;
    bool passed() const;
    /// One "criterion N: PASS|FAIL name - detail" line per result.
    std::string table() const;
    nlohmann::json to_json() const;
};

constexpr int acceptance_criterion_count = 14;
const char* acceptance_criterion_name(int id);

/// Runs the selected criteria (all when empty). Exceptions inside a criterion count as failure.
AcceptanceReport run_acceptance(const RunConfig& config, const std::vector<int>& selected = {});

}  // namespace polypol
