#include "tweetmarket/study/market_model.hpp"

#include <unordered_map>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::study {

void StudyWindows::validate() const {
    if (estimation_length < 30) throw ValidationError("estimation window must span at least 30 trading days");
    if (first_lag > 0 || last_lag < 0) throw ValidationError("event window must contain lag 0");
}

ReturnPair::ReturnPair(const core::ReturnSeries& stock, const core::ReturnSeries& market)
    : ticker_(stock.ticker()), dates_(market.dates().begin(), market.dates().end()),
      market_(market.values().begin(), market.values().end()) {
    std::unordered_map<Date, double> by_date;
    for (std::size_t i = 0; i < stock.size(); ++i) by_date.emplace(stock.dates()[i], stock.values()[i]);
    stock_.reserve(dates_.size());
    for (const auto& d : dates_) {
        const auto it = by_date.find(d);
        stock_.push_back(it == by_date.end() ? std::nullopt : std::optional<double>(it->second));
    }
}

ReturnPair::ReturnPair(const core::AlignedPanel& panel)
    : ticker_(panel.ticker), dates_(panel.dates), stock_(panel.returns.begin(), panel.returns.end()),
      market_(panel.market_returns) {}

std::optional<std::size_t> ReturnPair::event_index(Date d) const {
    const auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.end()) return std::nullopt;
    return std::size_t(it - dates_.begin());
}

namespace {

std::size_t lag_zero(const ReturnPair& r, Date event_day) {
    const auto idx = r.event_index(event_day);
    if (!idx) throw EventDropped("event day " + event_day.to_string() + " is after the last trading day");
    return *idx;
}

}  // namespace

MarketModel estimate_market_model(const ReturnPair& returns, Date event_day, const StudyWindows& windows) {
    windows.validate();
    const auto idx0 = static_cast<long>(lag_zero(returns, event_day));
    const long window_start = idx0 + windows.first_lag;
    const long length = windows.estimation_length;
    if (window_start < length) {
        throw EventDropped("insufficient estimation history: need " + std::to_string(length) +
                           " trading days before the event window, have " +
                           std::to_string(std::max(0L, window_start)));
    }
    const auto begin = std::size_t(window_start - length);
    const auto end = std::size_t(window_start);  // exclusive
    double mx = 0, my = 0;
    for (std::size_t i = begin; i < end; ++i) {
        if (!returns.stock()[i]) {
            throw EventDropped("stock return missing on " + returns.dates()[i].to_string() +
                               " in the estimation window");
        }
        mx += returns.market()[i];
        my += *returns.stock()[i];
    }
    const double n = double(length);
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, raw = 0;
    for (std::size_t i = begin; i < end; ++i) {
        const double dx = returns.market()[i] - mx;
        raw += returns.market()[i] * returns.market()[i];
        sxx += dx * dx;
        sxy += dx * (*returns.stock()[i] - my);
    }
    if (!(sxx > 1e-14 * raw)) throw EventDropped("market returns are constant in the estimation window");

    MarketModel m;
    m.beta = sxy / sxx;
    m.alpha = my - m.beta * mx;
    double ssr = 0;
    for (std::size_t i = begin; i < end; ++i) {
        const double e = *returns.stock()[i] - m.alpha - m.beta * returns.market()[i];
        ssr += e * e;
    }
    m.residual_variance = ssr / (n - 2.0);
    m.estimation_start = returns.dates()[begin];
    m.estimation_end = returns.dates()[end - 1];
    m.observations = std::size_t(length);
    return m;
}

std::vector<double> abnormal_returns(const ReturnPair& returns, const MarketModel& model,
                                     const StudyWindows& windows, Date event_day) {
    windows.validate();
    const auto idx0 = static_cast<long>(lag_zero(returns, event_day));
    if (idx0 + windows.first_lag < 0) throw EventDropped("event window starts before the first trading day");
    if (idx0 + windows.last_lag >= static_cast<long>(returns.size())) {
        throw EventDropped("event window extends past the last trading day");
    }
    std::vector<double> ar;
    ar.reserve(windows.lag_count());
    for (int tau = windows.first_lag; tau <= windows.last_lag; ++tau) {
        const auto i = std::size_t(idx0 + tau);
        if (!returns.stock()[i]) {
            throw EventDropped("stock return missing on " + returns.dates()[i].to_string() + " in the event window");
        }
        ar.push_back(*returns.stock()[i] - model.alpha - model.beta * returns.market()[i]);
    }
    return ar;
}

}  // namespace tweetmarket::study
