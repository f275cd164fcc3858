#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tweetmarket/core/date.hpp"

namespace tweetmarket::events {

struct PeakParams {
    int half_window = 5;        // L; the window spans 2L+1 days
    double min_activity = 10;   // n_min, floor of the denominator
    double threshold = 2.0;     // phi_t; a peak needs phi > phi_t
    int min_separation = 21;    // calendar days between surviving peaks

    /// Throws ValidationError unless L >= 1, n_min >= 1, phi_t > 0, separation >= 1.
    void validate() const;
};

enum class PolarityClass { Negative, Neutral, Positive };

std::string_view to_string(PolarityClass c);
/// Accepts "negative", "neutral", "positive".
PolarityClass parse_polarity_class(std::string_view s);

struct PolarityThresholds {
    double lower = 0.15;
    double upper = 0.7;

    /// Throws ValidationError unless -1 <= lower < upper <= 1.
    void validate() const;
};

struct Event {
    std::string ticker;
    core::Date date;
    double phi = 0.0;
    std::optional<double> polarity;
    PolarityClass polarity_class = PolarityClass::Neutral;
    bool is_ea = false;
};

}  // namespace tweetmarket::events
