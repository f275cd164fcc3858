#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tweetmarket/core/date.hpp"
#include "tweetmarket/core/series.hpp"

namespace tweetmarket::study {

using core::Date;

/// Lags are counted in market trading days relative to the event day (lag 0).
/// The estimation window is the `estimation_length` trading days that end the day
/// before `first_lag`.
struct StudyWindows {
    int estimation_length = 120;
    int first_lag = -10;
    int last_lag = 10;

    /// Throws ValidationError unless estimation_length >= 30 and first_lag <= 0 <= last_lag.
    void validate() const;
    std::size_t lag_count() const { return std::size_t(last_lag - first_lag + 1); }
};

/// Stock returns on the market's trading calendar. A stock value is missing on market
/// trading days where the stock has no return.
class ReturnPair {
public:
    ReturnPair(const core::ReturnSeries& stock, const core::ReturnSeries& market);
    explicit ReturnPair(const core::AlignedPanel& panel);

    const std::string& ticker() const { return ticker_; }
    std::span<const Date> dates() const { return dates_; }
    std::span<const std::optional<double>> stock() const { return stock_; }
    std::span<const double> market() const { return market_; }
    std::size_t size() const { return dates_.size(); }

    /// Index of the first trading date on or after `d` (events on non-trading days
    /// take effect on the next session).
    std::optional<std::size_t> event_index(Date d) const;

private:
    std::string ticker_;
    std::vector<Date> dates_;
    std::vector<std::optional<double>> stock_;
    std::vector<double> market_;
};

/// An event that cannot be studied; `what()` is the logged reason.
class EventDropped : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MarketModel {
    double alpha = 0.0;
    double beta = 0.0;
    /// SSR / (L - 2).
    double residual_variance = 0.0;
    Date estimation_start;
    Date estimation_end;
    std::size_t observations = 0;
};

/// OLS of stock on market returns over the estimation window of the event whose lag 0
/// falls on `event_day` (mapped to the next trading day if needed).
/// Throws EventDropped when the history is too short, a stock return is missing in the
/// window, or the market returns are constant there.
MarketModel estimate_market_model(const ReturnPair& returns, Date event_day, const StudyWindows& windows);

/// AR_tau = R_tau - alpha - beta * R_market,tau for tau = first_lag..last_lag.
/// Throws EventDropped when the event window leaves the data or a stock return is missing.
std::vector<double> abnormal_returns(const ReturnPair& returns, const MarketModel& model,
                                     const StudyWindows& windows, Date event_day);

}  // namespace tweetmarket::study
