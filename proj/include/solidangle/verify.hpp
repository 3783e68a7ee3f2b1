#pragma once

// Property suites behind `verify`: each suite runs a fixed grid of exact (or,
// for spectral, numerical) checks and records the first few failures.

#include <string>
#include <string_view>
#include <vector>

namespace solidangle {

struct SuiteResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> messages; // at most the first few failures

    bool passed() const { return failures == 0; }
};

/// reciprocity, pick, oracle, knuth, spectral.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite by name, or every suite for "all". Throws ParseError for an
/// unknown name.
std::vector<SuiteResult> run_verify(std::string_view suite);

/// One line per suite plus a final verdict line.
std::string format_verify_summary(const std::vector<SuiteResult>& results);

} // namespace solidangle
