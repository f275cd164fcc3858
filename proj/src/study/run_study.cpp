#include "tweetmarket/study/run_study.hpp"

#include <map>
#include <variant>

#include "tweetmarket/core/error.hpp"
#include "tweetmarket/core/parallel.hpp"

namespace tweetmarket::study {

StudyReport run_study(const std::vector<ReturnPair>& returns, const std::vector<events::Event>& events,
                      const StudyWindows& windows, StudyMode mode, std::size_t workers) {
    windows.validate();
    std::map<std::string, const ReturnPair*> by_ticker;
    for (const auto& r : returns) {
        if (!by_ticker.emplace(r.ticker(), &r).second) {
            throw ValidationError("duplicate return series for " + r.ticker());
        }
    }

    using Outcome = std::variant<std::string, EventAbnormalReturns>;
    const auto outcomes = core::parallel_map(events.size(), workers, [&](std::size_t i) -> Outcome {
        const auto& ev = events[i];
        if (mode == StudyMode::NonEa && ev.is_ea) return std::string("EA event excluded in non-EA mode");
        const auto it = by_ticker.find(ev.ticker);
        if (it == by_ticker.end()) return "no return series for " + ev.ticker;
        const ReturnPair& pair = *it->second;
        try {
            EventAbnormalReturns out;
            out.event = ev;
            const auto idx = pair.event_index(ev.date);
            if (!idx) throw EventDropped("event day " + ev.date.to_string() + " is after the last trading day");
            out.event_day = pair.dates()[*idx];
            out.model = estimate_market_model(pair, ev.date, windows);
            out.ar = abnormal_returns(pair, out.model, windows, ev.date);
            return out;
        } catch (const EventDropped& e) {
            return std::string(e.what());
        }
    });

    StudyReport report;
    report.mode = mode;
    report.windows = windows;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (const auto* reason = std::get_if<std::string>(&outcomes[i])) {
            report.dropped.push_back({events[i].ticker, events[i].date, *reason});
        } else {
            report.used.push_back(std::get<EventAbnormalReturns>(outcomes[i]));
        }
    }
    const events::PolarityClass order[] = {events::PolarityClass::Negative, events::PolarityClass::Neutral,
                                           events::PolarityClass::Positive};
    for (std::size_t c = 0; c < 3; ++c) report.results[c] = aggregate(report.used, order[c], windows);
    return report;
}

}  // namespace tweetmarket::study
