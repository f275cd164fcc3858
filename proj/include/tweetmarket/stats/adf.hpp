#pragma once

#include <cstddef>
#include <span>

#include "tweetmarket/stats/test_report.hpp"

namespace tweetmarket::stats {

/// Augmented Dickey-Fuller test, constant but no trend:
///   dx_t = c + gamma * x_{t-1} + sum_{j=1..p} delta_j * dx_{t-j} + e_t
/// The statistic is the t-ratio of gamma. H0: unit root. `reject` means the
/// series looks stationary.
///
/// The lag p is chosen by AIC over 0..max_lag on a common sample, then the
/// regression is re-estimated with the chosen p on all usable observations.
///
/// Critical values come from the Dickey-Fuller table for the constant-only
/// case (Fuller 1976; reproduced as Table B.6, case 2, in Hamilton 1994),
/// interpolated linearly in 1/n between the tabulated sample sizes
/// 25, 50, 100, 250, 500 and infinity. Supported levels: 0.01, 0.025, 0.05, 0.10.
struct AdfResult {
    TestReport report;
    std::size_t lags_used = 0;
    std::size_t observations = 0;
};

/// Schwert's bound floor(12 * (n/100)^(1/4)).
std::size_t schwert_max_lag(std::size_t n);

/// Requires x.size() >= max_lag + 10 and a non-constant series.
AdfResult adf_test(std::span<const double> x, std::size_t max_lag, double level = 0.05);

/// Same, with max_lag = schwert_max_lag(n) reduced as needed to satisfy the length requirement.
AdfResult adf_test_auto(std::span<const double> x, double level = 0.05);

/// Tabulated critical value for `observations` regression observations.
double adf_critical_value(std::size_t observations, double level);

}  // namespace tweetmarket::stats
