#pragma once

#include <string_view>
#include <vector>

#include "prodlog_cli/report.hpp"

namespace prodlog::cli {

enum class Level { quick, full };

struct SuiteOptions {
    Level level = Level::full;
    // Evaluate the closed-form reflection with
    //   a = delta (delta + s)/(2 s) + sigma sqrt(m V0)/(sqrt(2 E) hbar)
    // instead of (s + delta)^2/(4 s). Negative control for criterion 1.
    bool literal_a_term = false;
    // Restrict the run to one criterion (1..10); 0 runs all.
    int only = 0;
};

inline constexpr int kCriterionCount = 10;

std::string_view criterion_title(int criterion);

/// Checks for one criterion. Exceptions inside a check are recorded as a
/// failed check with the message in `detail`.
std::vector<Check> run_criterion(int criterion, const SuiteOptions& opts);

RunReport run_suite(const SuiteOptions& opts);

}  // namespace prodlog::cli
