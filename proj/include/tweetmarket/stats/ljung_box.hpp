#pragma once

#include <cstddef>
#include <span>

#include "tweetmarket/stats/test_report.hpp"

namespace tweetmarket::stats {

/// Sample autocorrelation at lag k (denominator: full-sample sum of squared deviations).
double autocorrelation(std::span<const double> x, std::size_t k);

/// Ljung-Box portmanteau test: Q = n(n+2) sum_{k=1..h} r_k^2 / (n-k), compared with
/// chi-square(h). Requires 1 <= lags and n > lags + 1; a constant series throws
/// DegenerateInputError.
TestReport ljung_box(std::span<const double> residuals, std::size_t lags, double level = 0.05);

}  // namespace tweetmarket::stats
