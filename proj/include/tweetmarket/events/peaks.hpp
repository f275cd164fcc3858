#pragma once

#include <span>
#include <vector>

#include "tweetmarket/core/series.hpp"
#include "tweetmarket/events/event.hpp"

namespace tweetmarket::events {

// Detection works on calendar days. Days missing from a TweetDailySeries count as
// zero tweets (the series is densified first).

/// phi(d0) = (TW_d0 - TW_b) / max(TW_b, n_min), TW_b the median of the 2L+1 days
/// centered on d0. Throws BoundaryError if the window does not fit in the series.
double outlier_fraction(const core::TweetDailySeries& series, core::Date d0, const PeakParams& params);

/// Same on a plain volume vector, window centered at `center`.
double outlier_fraction(std::span<const double> volumes, std::size_t center, const PeakParams& params);

/// All days with phi > phi_t, then thinned so that surviving peaks are at least
/// `min_separation` days apart: candidates are visited by descending phi (ties: earlier
/// date first) and kept unless a kept peak is closer than `min_separation` days.
/// Requires at least 2L+1 days (ValidationError). Results are in date order.
std::vector<Event> detect_peaks(const core::TweetDailySeries& series, const PeakParams& params = {});

/// Same on arbitrary increasing dates with their volumes. The sliding window runs over
/// positions, so a stitched (gapped) series is treated as contiguous.
std::vector<Event> detect_peaks(const std::string& ticker, std::span<const core::Date> dates,
                                std::span<const double> volumes, const PeakParams& params = {});

struct EaDate {
    std::string ticker;
    core::Date date;
    friend bool operator==(const EaDate&, const EaDate&) = default;
};

/// Flags events that have an EA date of the same ticker within one day.
std::vector<Event> tag_ea(std::vector<Event> events, std::span<const EaDate> ea_dates);

/// Removes days d-1..d+1 around every EA date of the series' ticker, joins the remaining
/// days end to end and re-runs detection. Event dates stay in calendar coordinates.
std::vector<Event> detect_non_ea(const core::TweetDailySeries& series, std::span<const EaDate> ea_dates,
                                 const PeakParams& params = {});

}  // namespace tweetmarket::events
