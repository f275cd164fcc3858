#include "tweetmarket/core/series.hpp"

#include <algorithm>
#include <cmath>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::core {

namespace {

void require_increasing(std::span<const Date> dates, const std::string& what) {
    for (std::size_t i = 1; i < dates.size(); ++i) {
        if (!(dates[i - 1] < dates[i])) {
            throw ValidationError(what + ": dates not strictly increasing at " +
                                  dates[i].to_string());
        }
    }
}

void require_same_size(std::size_t a, std::size_t b, const std::string& what) {
    if (a != b) throw ValidationError(what + ": dates and values differ in length");
}

}  // namespace

TradingCalendar::TradingCalendar(std::vector<Date> dates) : dates_(std::move(dates)) {
    require_increasing(dates_, "trading calendar");
}

std::optional<std::size_t> TradingCalendar::index_of(Date d) const {
    const auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.end() || *it != d) return std::nullopt;
    return static_cast<std::size_t>(it - dates_.begin());
}

std::optional<std::size_t> TradingCalendar::first_on_or_after(Date d) const {
    const auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - dates_.begin());
}

PriceSeries::PriceSeries(std::string ticker, std::vector<Date> dates, std::vector<double> closes)
    : ticker_(std::move(ticker)), dates_(std::move(dates)), closes_(std::move(closes)) {
    require_same_size(dates_.size(), closes_.size(), "prices " + ticker_);
    require_increasing(dates_, "prices " + ticker_);
    for (std::size_t i = 0; i < closes_.size(); ++i) {
        if (!(closes_[i] > 0.0) || !std::isfinite(closes_[i])) {
            throw ValidationError("prices " + ticker_ + ": non-positive close on " +
                                  dates_[i].to_string());
        }
    }
}

ReturnSeries::ReturnSeries(std::string ticker, std::vector<Date> dates, std::vector<double> returns)
    : ticker_(std::move(ticker)), dates_(std::move(dates)), values_(std::move(returns)) {
    require_same_size(dates_.size(), values_.size(), "returns " + ticker_);
    require_increasing(dates_, "returns " + ticker_);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] > -1.0) || !std::isfinite(values_[i])) {
            throw ValidationError("returns " + ticker_ + ": return <= -1 on " +
                                  dates_[i].to_string());
        }
    }
}

TweetDailySeries::TweetDailySeries(std::string ticker, std::vector<Date> dates,
                                   std::vector<TweetCounts> counts)
    : ticker_(std::move(ticker)), dates_(std::move(dates)), counts_(std::move(counts)) {
    require_same_size(dates_.size(), counts_.size(), "tweets " + ticker_);
    require_increasing(dates_, "tweets " + ticker_);
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (!counts_[i].consistent()) {
            throw ValidationError("tweets " + ticker_ + ": negative or inconsistent counts on " +
                                  dates_[i].to_string());
        }
    }
}

std::vector<double> TweetDailySeries::volumes() const {
    std::vector<double> out;
    out.reserve(counts_.size());
    for (const auto& c : counts_) out.push_back(static_cast<double>(c.total));
    return out;
}

std::int64_t TweetDailySeries::total_tweets() const {
    std::int64_t sum = 0;
    for (const auto& c : counts_) sum += c.total;
    return sum;
}

TweetDailySeries TweetDailySeries::densified() const {
    if (dates_.empty()) return *this;
    const auto span = days_between(dates_.front(), dates_.back());
    std::vector<Date> dates;
    std::vector<TweetCounts> counts;
    dates.reserve(static_cast<std::size_t>(span) + 1);
    counts.reserve(static_cast<std::size_t>(span) + 1);
    std::size_t j = 0;
    for (std::int64_t k = 0; k <= span; ++k) {
        const Date d = dates_.front().plus_days(k);
        dates.push_back(d);
        if (j < dates_.size() && dates_[j] == d) {
            counts.push_back(counts_[j++]);
        } else {
            counts.push_back(TweetCounts{});
        }
    }
    return TweetDailySeries(ticker_, std::move(dates), std::move(counts));
}

PolaritySeries::PolaritySeries(std::string ticker, std::vector<Date> dates,
                               std::vector<std::optional<double>> values)
    : ticker_(std::move(ticker)), dates_(std::move(dates)), values_(std::move(values)) {
    require_same_size(dates_.size(), values_.size(), "polarity " + ticker_);
    require_increasing(dates_, "polarity " + ticker_);
    for (const auto& v : values_) {
        if (v && !(*v >= -1.0 && *v <= 1.0)) {
            throw ValidationError("polarity " + ticker_ + ": value outside [-1, 1]");
        }
    }
}

std::optional<double> PolaritySeries::at(Date d) const {
    const auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.end() || *it != d) return std::nullopt;
    return values_[static_cast<std::size_t>(it - dates_.begin())];
}

std::vector<double> AlignedPanel::tweet_volume() const {
    std::vector<double> out;
    out.reserve(tweets.size());
    for (const auto& c : tweets) out.push_back(static_cast<double>(c.total));
    return out;
}

AlignedPanel::Pair AlignedPanel::polarity_and_returns(MissingPolarity policy) const {
    Pair out;
    out.x.reserve(size());
    out.y.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (!polarity[i] && policy == MissingPolarity::Drop) continue;
        out.x.push_back(polarity[i].value_or(0.0));
        out.y.push_back(returns[i]);
    }
    return out;
}

ReturnSeries compute_returns(const PriceSeries& prices) {
    if (prices.size() < 2) {
        throw EmptyInputError("prices " + prices.ticker() + ": need at least 2 observations");
    }
    const auto p = prices.closes();
    std::vector<Date> dates(prices.dates().begin() + 1, prices.dates().end());
    std::vector<double> r;
    r.reserve(p.size() - 1);
    for (std::size_t d = 1; d < p.size(); ++d) r.push_back((p[d] - p[d - 1]) / p[d - 1]);
    return ReturnSeries(prices.ticker(), std::move(dates), std::move(r));
}

std::optional<double> polarity_of(const TweetCounts& c) {
    const auto denom = c.positive + c.negative;
    if (denom == 0) return std::nullopt;
    return static_cast<double>(c.positive - c.negative) / static_cast<double>(denom);
}

PolaritySeries compute_polarity(const TweetDailySeries& tweets) {
    std::vector<std::optional<double>> values;
    values.reserve(tweets.size());
    for (const auto& c : tweets.counts()) {
        if (!c.consistent()) throw ValidationError("tweets " + tweets.ticker() + ": bad counts");
        values.push_back(polarity_of(c));
    }
    return PolaritySeries(tweets.ticker(),
                          std::vector<Date>(tweets.dates().begin(), tweets.dates().end()),
                          std::move(values));
}

AlignedPanel align(const ReturnSeries& returns, const TweetDailySeries& tweets,
                   const ReturnSeries& market) {
    if (returns.ticker() != tweets.ticker()) {
        throw ValidationError("align: ticker mismatch " + returns.ticker() + " vs " +
                              tweets.ticker());
    }
    AlignedPanel panel;
    panel.ticker = returns.ticker();

    const auto rd = returns.dates();
    const auto md = market.dates();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < rd.size() && j < md.size()) {
        if (rd[i] < md[j]) {
            ++i;
        } else if (md[j] < rd[i]) {
            ++j;
        } else {
            panel.dates.push_back(rd[i]);
            panel.returns.push_back(returns.values()[i]);
            panel.abs_returns.push_back(std::abs(returns.values()[i]));
            panel.market_returns.push_back(market.values()[j]);
            ++i;
            ++j;
        }
    }
    if (panel.dates.empty()) {
        throw AlignmentError("align " + panel.ticker + ": returns and market share no dates");
    }

    panel.tweets.assign(panel.dates.size(), TweetCounts{});
    const Date first = panel.dates.front();
    const Date last = panel.dates.back();
    const auto td = tweets.dates();
    const auto tc = tweets.counts();
    std::size_t slot = 0;
    for (std::size_t k = 0; k < td.size(); ++k) {
        if (td[k] < first) continue;
        if (last < td[k]) break;
        while (panel.dates[slot] < td[k]) ++slot;
        panel.tweets[slot] += tc[k];
    }
    panel.polarity.reserve(panel.size());
    for (const auto& c : panel.tweets) panel.polarity.push_back(polarity_of(c));
    return panel;
}

}  // namespace tweetmarket::core
