#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tweetmarket/core/date.hpp"

namespace tweetmarket::core {

/// Strictly increasing list of trading dates.
class TradingCalendar {
public:
    TradingCalendar() = default;
    explicit TradingCalendar(std::vector<Date> dates);

    std::span<const Date> dates() const { return dates_; }
    std::size_t size() const { return dates_.size(); }
    bool empty() const { return dates_.empty(); }

    std::optional<std::size_t> index_of(Date d) const;
    /// Index of the first trading date >= d.
    std::optional<std::size_t> first_on_or_after(Date d) const;

private:
    std::vector<Date> dates_;
};

/// Daily closing prices for one ticker. Prices are strictly positive and dates strictly increasing.
class PriceSeries {
public:
    PriceSeries(std::string ticker, std::vector<Date> dates, std::vector<double> closes);

    const std::string& ticker() const { return ticker_; }
    std::span<const Date> dates() const { return dates_; }
    std::span<const double> closes() const { return closes_; }
    std::size_t size() const { return closes_.size(); }
    TradingCalendar calendar() const { return TradingCalendar(dates_); }

private:
    std::string ticker_;
    std::vector<Date> dates_;
    std::vector<double> closes_;
};

/// Raw (not log) daily returns; every value is > -1.
class ReturnSeries {
public:
    ReturnSeries(std::string ticker, std::vector<Date> dates, std::vector<double> returns);

    const std::string& ticker() const { return ticker_; }
    std::span<const Date> dates() const { return dates_; }
    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }

private:
    std::string ticker_;
    std::vector<Date> dates_;
    std::vector<double> values_;
};

struct TweetCounts {
    std::int64_t negative = 0;
    std::int64_t neutral = 0;
    std::int64_t positive = 0;
    std::int64_t total = 0;

    static TweetCounts from_classes(std::int64_t neg, std::int64_t neu, std::int64_t pos) {
        return {neg, neu, pos, neg + neu + pos};
    }
    bool consistent() const {
        return negative >= 0 && neutral >= 0 && positive >= 0 &&
               total == negative + neutral + positive;
    }
    TweetCounts& operator+=(const TweetCounts& o) {
        negative += o.negative;
        neutral += o.neutral;
        positive += o.positive;
        total += o.total;
        return *this;
    }
    friend bool operator==(const TweetCounts&, const TweetCounts&) = default;
};

/// Per-day tweet counts by sentiment class for one ticker, on calendar days
/// (weekends included). Dates are strictly increasing but need not be contiguous.
class TweetDailySeries {
public:
    TweetDailySeries(std::string ticker, std::vector<Date> dates, std::vector<TweetCounts> counts);

    const std::string& ticker() const { return ticker_; }
    std::span<const Date> dates() const { return dates_; }
    std::span<const TweetCounts> counts() const { return counts_; }
    std::size_t size() const { return counts_.size(); }

    /// TW_d as doubles, in date order.
    std::vector<double> volumes() const;
    std::int64_t total_tweets() const;

    /// Copy covering every calendar day from the first to the last date, gaps filled with zeros.
    TweetDailySeries densified() const;

private:
    std::string ticker_;
    std::vector<Date> dates_;
    std::vector<TweetCounts> counts_;
};

/// P_d = (tw+ - tw-)/(tw+ + tw-); missing when there are no non-neutral tweets.
class PolaritySeries {
public:
    PolaritySeries(std::string ticker, std::vector<Date> dates,
                   std::vector<std::optional<double>> values);

    const std::string& ticker() const { return ticker_; }
    std::span<const Date> dates() const { return dates_; }
    std::span<const std::optional<double>> values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    /// Value on `d`; nullopt when the date is absent or P_d is missing.
    std::optional<double> at(Date d) const;

private:
    std::string ticker_;
    std::vector<Date> dates_;
    std::vector<std::optional<double>> values_;
};

enum class MissingPolarity {
    Zero,  // substitute 0, the balanced value
    Drop,  // remove the day from both series
};

/// Stock, tweet, and market series on a shared trading-date index.
struct AlignedPanel {
    std::string ticker;
    std::vector<Date> dates;
    std::vector<double> returns;
    std::vector<double> abs_returns;
    std::vector<double> market_returns;
    std::vector<TweetCounts> tweets;  // folded onto trading days
    std::vector<std::optional<double>> polarity;

    std::size_t size() const { return dates.size(); }
    std::vector<double> tweet_volume() const;

    struct Pair {
        std::vector<double> x;
        std::vector<double> y;
    };
    /// (P_d, R_d) with missing polarity handled per `policy`.
    Pair polarity_and_returns(MissingPolarity policy) const;
};

ReturnSeries compute_returns(const PriceSeries& prices);

PolaritySeries compute_polarity(const TweetDailySeries& tweets);

std::optional<double> polarity_of(const TweetCounts& counts);

/// Restricts to trading dates present in both `returns` and `market`, and folds the tweet
/// counts of non-trading days onto the next trading day. Tweets dated outside
/// [first panel date, last panel date] are not included.
AlignedPanel align(const ReturnSeries& returns, const TweetDailySeries& tweets,
                   const ReturnSeries& market);

}  // namespace tweetmarket::core
