#pragma once

#include <array>
#include <string>
#include <vector>

#include "tweetmarket/study/aggregate.hpp"

namespace tweetmarket::study {

enum class StudyMode { All, NonEa };

struct DroppedEvent {
    std::string ticker;
    Date date;
    std::string reason;
};

struct StudyReport {
    StudyMode mode = StudyMode::All;
    StudyWindows windows;
    std::array<EventStudyResult, 3> results;  // negative, neutral, positive
    std::vector<EventAbnormalReturns> used;
    std::vector<DroppedEvent> dropped;
};

/// Estimates a market model and abnormal returns for every event, then aggregates
/// per polarity class. In NonEa mode, events flagged EA are skipped (and logged).
/// Events for tickers without a return pair are dropped with a reason.
/// Per-event work runs on `workers` threads; results do not depend on the count.
StudyReport run_study(const std::vector<ReturnPair>& returns, const std::vector<events::Event>& events,
                      const StudyWindows& windows = {}, StudyMode mode = StudyMode::All,
                      std::size_t workers = 1);

}  // namespace tweetmarket::study
