#pragma once

#include <string>
#include <vector>

namespace witten {

struct CheckResult {
    int criterion;          // 1..14; 0 for supplementary checks
    std::string suite;
    std::string name;
    bool pass;
    std::string observed;
    std::string expected;
    std::string tolerance;  // "exact" or a number
};

constexpr int kCriterionCount = 14;

const std::vector<std::string>& verify_suites();
std::string criterion_title(int criterion);
std::string criterion_suite(int criterion);

// Failing checks are recorded, never thrown.
std::vector<CheckResult> run_criterion(int criterion);
// suite in {all, core, polylog, su2, su3, padic}; DomainError otherwise.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace witten
