#pragma once

// Cross-module consistency suites behind `chains verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace chains {

enum class VerifyLevel { quick, full };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::quick;
    // Perturbs one coefficient before every oracle comparison. Used as a
    // negative control: verification must then fail.
    bool inject_fault = false;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;  // offending formula and details
    double seconds = 0;

    bool passed() const noexcept { return failures == 0; }
};

// Enumeration cap per level: n <= 6 quick, n <= 8 full.
std::uint64_t enumerate_cap(VerifyLevel level);

std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace chains
