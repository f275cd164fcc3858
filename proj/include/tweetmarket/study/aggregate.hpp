#pragma once

#include <span>
#include <vector>

#include "tweetmarket/events/event.hpp"
#include "tweetmarket/study/market_model.hpp"

namespace tweetmarket::study {

/// Per-event input to the aggregation.
struct EventAbnormalReturns {
    events::Event event;
    Date event_day;  // trading day of lag 0
    MarketModel model;
    std::vector<double> ar;  // one per lag
};

struct StudyRow {
    int lag = 0;
    double abar = 0.0;     // mean AR over events
    double car = 0.0;      // sum of abar from the first lag to this lag
    double var_car = 0.0;  // (1/N^2) sum_i (lags so far) * sigma_i^2
    double theta = 0.0;    // car / sqrt(var_car)
    bool sig5 = false;     // |theta| > 1.96
    bool sig1 = false;     // |theta| > 2.58
};

struct EventStudyResult {
    events::PolarityClass polarity_class = events::PolarityClass::Neutral;
    std::size_t n_events = 0;
    std::vector<StudyRow> rows;  // empty when n_events == 0
};

struct SignificanceLevels {
    double five_percent = 1.96;
    double one_percent = 2.58;
};

/// Aggregates the events of class `cls`. When var_car is 0, theta is 0 if car is 0 and
/// +/-infinity otherwise.
EventStudyResult aggregate(std::span<const EventAbnormalReturns> events, events::PolarityClass cls,
                           const StudyWindows& windows);

/// Sets the two-sided marks (strict inequalities).
void significance(EventStudyResult& result, const SignificanceLevels& levels = {});

}  // namespace tweetmarket::study
