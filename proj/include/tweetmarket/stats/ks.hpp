#pragma once

#include <functional>
#include <span>

#include "tweetmarket/stats/test_report.hpp"

namespace tweetmarket::stats {

/// One-sample Kolmogorov-Smirnov test against a continuous CDF. The p-value uses the
/// Kolmogorov limiting distribution with Stephens' small-sample correction
/// lambda = (sqrt(n) + 0.12 + 0.11/sqrt(n)) * D.
TestReport ks_test(std::span<const double> sample, const std::function<double(double)>& cdf,
                   double level = 0.05);

TestReport ks_test_standard_normal(std::span<const double> sample, double level = 0.05);

/// Q_KS(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_sf(double lambda);

}  // namespace tweetmarket::stats
