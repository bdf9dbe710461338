#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace burau {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteOptions {
    int n = 5;
    int max_degree = 5;
    int random_words = 50;
    std::uint64_t seed = 12345;
};

/// Runs the structural checks (representation, filtration, Lie algebra, phi, witnesses) and
/// reports one result per check; `on_result` is called as each check finishes.
std::vector<CheckResult> run_structure_suite(const SuiteOptions& options,
                                             const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace burau
