#pragma once

#include <optional>
#include <string>

namespace tweetmarket::stats {

/// Outcome of a hypothesis test at a fixed significance level.
/// `reject` follows from the p-value when present, otherwise from the critical value.
struct TestReport {
    std::string test;
    double statistic = 0.0;
    std::optional<double> p_value;
    std::optional<double> critical_value;
    double level = 0.05;
    bool reject = false;
    std::string note;
};

}  // namespace tweetmarket::stats
