#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "tweetmarket/events/event.hpp"
#include "tweetmarket/events/peaks.hpp"

namespace tweetmarket::events {

/// `ticker,date` rows.
std::vector<EaDate> read_ea_dates(const std::filesystem::path& path);

/// `ticker,date,phi,polarity_value,polarity_class,is_ea`; missing polarity is an empty field.
void write_events_csv(std::ostream& out, const std::vector<Event>& events);
std::vector<Event> read_events_csv(const std::filesystem::path& path);

/// Histogram of event polarities: `bin_lower,bin_upper,count` over `bins` equal bins of
/// [-1, 1]; events without polarity are counted in a trailing `missing` row.
void write_polarity_histogram(std::ostream& out, const std::vector<Event>& events, int bins = 20);

}  // namespace tweetmarket::events
