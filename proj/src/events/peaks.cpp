#include "tweetmarket/events/peaks.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::events {

using core::Date;

void PeakParams::validate() const {
    if (half_window < 1) throw ValidationError("half_window must be >= 1");
    if (!(min_activity >= 1)) throw ValidationError("min_activity must be >= 1");
    if (!(threshold > 0)) throw ValidationError("threshold must be > 0");
    if (min_separation < 1) throw ValidationError("min_separation must be >= 1");
}

double outlier_fraction(std::span<const double> volumes, std::size_t center, const PeakParams& params) {
    params.validate();
    const auto half = static_cast<std::size_t>(params.half_window);
    if (center < half || center + half >= volumes.size()) {
        throw BoundaryError("window of " + std::to_string(2 * half + 1) + " days around position " +
                            std::to_string(center) + " leaves the series");
    }
    std::vector<double> window(volumes.begin() + long(center - half),
                               volumes.begin() + long(center + half + 1));
    auto mid = window.begin() + long(half);
    std::nth_element(window.begin(), mid, window.end());
    const double baseline = *mid;
    return (volumes[center] - baseline) / std::max(baseline, params.min_activity);
}

double outlier_fraction(const core::TweetDailySeries& series, Date d0, const PeakParams& params) {
    const auto dense = series.densified();
    const auto dates = dense.dates();
    if (dates.empty() || d0 < dates.front() || dates.back() < d0) {
        throw BoundaryError(d0.to_string() + " is outside the tweet series");
    }
    const auto index = static_cast<std::size_t>(days_between(dates.front(), d0));
    return outlier_fraction(dense.volumes(), index, params);
}

std::vector<Event> detect_peaks(const std::string& ticker, std::span<const Date> dates,
                                std::span<const double> volumes, const PeakParams& params) {
    params.validate();
    if (dates.size() != volumes.size()) throw ValidationError("dates and volumes differ in length");
    const auto half = static_cast<std::size_t>(params.half_window);
    if (volumes.size() < 2 * half + 1) {
        throw ValidationError("series of " + std::to_string(volumes.size()) +
                              " days is shorter than the detection window");
    }
    std::vector<Event> candidates;
    for (std::size_t i = half; i + half < volumes.size(); ++i) {
        const double phi = outlier_fraction(volumes, i, params);
        if (phi > params.threshold) candidates.push_back(Event{ticker, dates[i], phi, {}, {}, false});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Event& a, const Event& b) { return a.phi > b.phi; });
    std::vector<Event> kept;
    for (auto& c : candidates) {
        const bool clash = std::any_of(kept.begin(), kept.end(), [&](const Event& k) {
            return std::llabs(days_between(k.date, c.date)) < params.min_separation;
        });
        if (!clash) kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end(), [](const Event& a, const Event& b) { return a.date < b.date; });
    return kept;
}

std::vector<Event> detect_peaks(const core::TweetDailySeries& series, const PeakParams& params) {
    const auto dense = series.densified();
    const auto volumes = dense.volumes();
    return detect_peaks(series.ticker(), dense.dates(), volumes, params);
}

std::vector<Event> tag_ea(std::vector<Event> events, std::span<const EaDate> ea_dates) {
    for (auto& e : events) {
        e.is_ea = std::any_of(ea_dates.begin(), ea_dates.end(), [&](const EaDate& ea) {
            return ea.ticker == e.ticker && std::llabs(days_between(ea.date, e.date)) <= 1;
        });
    }
    return events;
}

std::vector<Event> detect_non_ea(const core::TweetDailySeries& series, std::span<const EaDate> ea_dates,
                                 const PeakParams& params) {
    const auto dense = series.densified();
    std::unordered_set<Date> removed;
    for (const auto& ea : ea_dates) {
        if (ea.ticker != series.ticker()) continue;
        for (int k = -1; k <= 1; ++k) removed.insert(ea.date.plus_days(k));
    }
    std::vector<Date> dates;
    std::vector<double> volumes;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (removed.count(dense.dates()[i])) continue;
        dates.push_back(dense.dates()[i]);
        volumes.push_back(double(dense.counts()[i].total));
    }
    return detect_peaks(series.ticker(), dates, volumes, params);
}

}  // namespace tweetmarket::events
