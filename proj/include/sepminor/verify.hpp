#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sepminor {

enum class VerifyLevel { Quick, Full };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Quick;
    std::uint64_t seed = 42;
    /// Corrupts one witness before it is checked (the suite must then fail).
    bool inject_fault = false;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string measured;
    std::string expected;
    std::string tolerance;
};

struct VerifyReport {
    VerifyLevel level = VerifyLevel::Quick;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    [[nodiscard]] int failures() const;
    /// Line-oriented report; contains no timings, so equal inputs give equal bytes.
    [[nodiscard]] std::string text() const;
};

VerifyReport verify_suite(const VerifyOptions& options);

}  // namespace sepminor
