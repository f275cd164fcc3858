#include "tweetmarket/events/polarity.hpp"

#include <algorithm>
#include <cmath>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::events {

std::string_view to_string(PolarityClass c) {
    switch (c) {
        case PolarityClass::Negative: return "negative";
        case PolarityClass::Neutral: return "neutral";
        case PolarityClass::Positive: return "positive";
    }
    return "neutral";
}

PolarityClass parse_polarity_class(std::string_view s) {
    if (s == "negative") return PolarityClass::Negative;
    if (s == "neutral") return PolarityClass::Neutral;
    if (s == "positive") return PolarityClass::Positive;
    throw ValidationError("unknown polarity class '" + std::string(s) + "'");
}

void PolarityThresholds::validate() const {
    if (!(lower >= -1.0 && lower < upper && upper <= 1.0)) {
        throw ValidationError("polarity thresholds must satisfy -1 <= lower < upper <= 1");
    }
}

PolarityClass classify(std::optional<double> polarity, const PolarityThresholds& thresholds) {
    if (!polarity) return PolarityClass::Neutral;
    if (*polarity < thresholds.lower) return PolarityClass::Negative;
    if (*polarity > thresholds.upper) return PolarityClass::Positive;
    return PolarityClass::Neutral;
}

std::vector<Event> assign_polarity(std::vector<Event> events, const core::PolaritySeries& polarity,
                                   const PolarityThresholds& thresholds) {
    thresholds.validate();
    for (auto& e : events) {
        if (e.ticker != polarity.ticker()) {
            throw ValidationError("polarity series for " + polarity.ticker() + " applied to event of " +
                                  e.ticker);
        }
        e.polarity = polarity.at(e.date);
        e.polarity_class = classify(e.polarity, thresholds);
    }
    return events;
}

namespace {

double quantile7(const std::vector<double>& sorted, double p) {
    const double h = double(sorted.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - double(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

DerivedThresholds derive_thresholds(std::span<const double> peak_polarities) {
    if (peak_polarities.size() < 3) throw ValidationError("need at least 3 polarity values for terciles");
    std::vector<double> v(peak_polarities.begin(), peak_polarities.end());
    for (double x : v) {
        if (!(x >= -1.0 && x <= 1.0)) throw ValidationError("polarity values must lie in [-1, 1]");
    }
    std::sort(v.begin(), v.end());
    DerivedThresholds out;
    const double lo = quantile7(v, 1.0 / 3.0);
    const double hi = quantile7(v, 2.0 / 3.0);
    if (!(lo < hi)) {
        out.degenerate = true;
        out.warning = "terciles coincide at " + std::to_string(lo) + "; using default thresholds";
        return out;
    }
    out.thresholds = {lo, hi};
    return out;
}

}  // namespace tweetmarket::events
