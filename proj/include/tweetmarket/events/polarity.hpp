#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tweetmarket/core/series.hpp"
#include "tweetmarket/events/event.hpp"

namespace tweetmarket::events {

/// [-1, lower) negative, [lower, upper] neutral, (upper, 1] positive; missing is neutral.
PolarityClass classify(std::optional<double> polarity, const PolarityThresholds& thresholds = {});

/// Sets polarity and class from the peak-day value of `polarity` (same ticker).
std::vector<Event> assign_polarity(std::vector<Event> events, const core::PolaritySeries& polarity,
                                   const PolarityThresholds& thresholds = {});

struct DerivedThresholds {
    PolarityThresholds thresholds;
    bool degenerate = false;  // terciles coincided; defaults were returned instead
    std::string warning;
};

/// Empirical terciles (type-7 quantiles at 1/3 and 2/3). Requires >= 3 values.
DerivedThresholds derive_thresholds(std::span<const double> peak_polarities);

}  // namespace tweetmarket::events
