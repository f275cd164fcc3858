#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tweetmarket/core/series.hpp"

namespace tweetmarket::cli {

struct PriceTable {
    std::map<std::string, core::PriceSeries> series;
    std::vector<std::string> warnings;
};

struct TweetTable {
    std::map<std::string, core::TweetDailySeries> series;
    std::vector<std::string> warnings;
};

/// `date,ticker,close`. Rows may come in any order; duplicates are errors.
PriceTable read_prices(const std::filesystem::path& path);

/// `date,ticker,neg,neu,pos` daily counts, or `timestamp,ticker,label` single tweets
/// (label -1/0/1) counted per date. Timestamps keep their first 10 characters (YYYY-MM-DD).
TweetTable read_tweets(const std::filesystem::path& path);

struct Dataset {
    std::map<std::string, core::PriceSeries> prices;  // stocks only
    std::optional<core::PriceSeries> market;
    std::map<std::string, core::TweetDailySeries> tweets;
    std::vector<std::string> warnings;
};

/// Reads prices and tweets; the market series is taken from `market_path` when given,
/// otherwise from the `market_ticker` rows of the price file.
Dataset load_dataset(const std::filesystem::path& prices_path, const std::filesystem::path& tweets_path,
                     const std::filesystem::path& market_path, const std::string& market_ticker);

/// Stock tickers that have prices, tweets and a market series to align with.
std::vector<std::string> analysable_tickers(const Dataset& data);

/// Aligned panel for one ticker. Requires the market series.
core::AlignedPanel panel_for(const Dataset& data, const std::string& ticker);

}  // namespace tweetmarket::cli
