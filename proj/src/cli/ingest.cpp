#include "tweetmarket/cli/ingest.hpp"

#include <charconv>

#include "tweetmarket/core/csv.hpp"
#include "tweetmarket/core/error.hpp"

namespace tweetmarket::cli {

using core::Date;

namespace {

template <typename T>
T number(const core::CsvTable& t, const core::CsvRow& row, std::size_t col, const char* what) {
    const auto s = core::trim(row.fields[col]);
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError(t.source, row.line, std::string("invalid ") + what + ": '" + std::string(s) + "'");
    }
    return v;
}

Date date(const core::CsvTable& t, const core::CsvRow& row, std::size_t col) {
    try {
        return Date::parse(core::trim(row.fields[col]));
    } catch (const ValidationError& e) {
        throw ParseError(t.source, row.line, e.what());
    }
}

std::string ticker(const core::CsvTable& t, const core::CsvRow& row, std::size_t col) {
    std::string s(core::trim(row.fields[col]));
    if (s.empty()) throw ParseError(t.source, row.line, "empty ticker");
    return s;
}

bool empty_file(const core::CsvTable& t) { return t.header.empty() || (t.header.size() == 1 && t.header[0].empty()); }

}  // namespace

PriceTable read_prices(const std::filesystem::path& path) {
    const auto t = core::read_csv(path);
    PriceTable out;
    if (empty_file(t)) {
        out.warnings.push_back(path.string() + ": empty price file");
        return out;
    }
    const auto c_date = t.require_column("date");
    const auto c_ticker = t.require_column("ticker");
    const auto c_close = t.require_column("close");
    std::map<std::string, std::map<Date, double>> rows;
    for (const auto& row : t.rows) {
        const double close = number<double>(t, row, c_close, "close");
        if (!(close > 0)) throw ParseError(t.source, row.line, "close price must be positive");
        auto& series = rows[ticker(t, row, c_ticker)];
        if (!series.emplace(date(t, row, c_date), close).second) {
            throw ParseError(t.source, row.line, "duplicate date for ticker");
        }
    }
    if (t.rows.empty()) out.warnings.push_back(path.string() + ": no price rows");
    for (auto& [name, by_date] : rows) {
        std::vector<Date> d;
        std::vector<double> p;
        for (const auto& [k, v] : by_date) {
            d.push_back(k);
            p.push_back(v);
        }
        out.series.emplace(name, core::PriceSeries(name, std::move(d), std::move(p)));
    }
    return out;
}

TweetTable read_tweets(const std::filesystem::path& path) {
    const auto t = core::read_csv(path);
    TweetTable out;
    if (empty_file(t)) {
        out.warnings.push_back(path.string() + ": empty tweet file");
        return out;
    }
    std::map<std::string, std::map<Date, core::TweetCounts>> rows;
    const auto c_ticker = t.require_column("ticker");
    if (t.column("neg") && t.column("neu") && t.column("pos")) {
        const auto c_date = t.require_column("date");
        const auto c_neg = *t.column("neg"), c_neu = *t.column("neu"), c_pos = *t.column("pos");
        for (const auto& row : t.rows) {
            const auto neg = number<std::int64_t>(t, row, c_neg, "neg");
            const auto neu = number<std::int64_t>(t, row, c_neu, "neu");
            const auto pos = number<std::int64_t>(t, row, c_pos, "pos");
            if (neg < 0 || neu < 0 || pos < 0) throw ParseError(t.source, row.line, "negative tweet count");
            auto& series = rows[ticker(t, row, c_ticker)];
            if (!series.emplace(date(t, row, c_date), core::TweetCounts::from_classes(neg, neu, pos)).second) {
                throw ParseError(t.source, row.line, "duplicate date for ticker");
            }
        }
    } else if (t.column("timestamp") && t.column("label")) {
        const auto c_ts = *t.column("timestamp"), c_label = *t.column("label");
        for (const auto& row : t.rows) {
            const auto ts = core::trim(row.fields[c_ts]);
            Date d;
            try {
                d = Date::parse(ts.substr(0, 10));
            } catch (const ValidationError& e) {
                throw ParseError(t.source, row.line, e.what());
            }
            const auto label = number<int>(t, row, c_label, "label");
            if (label < -1 || label > 1) throw ParseError(t.source, row.line, "label must be -1, 0 or 1");
            auto& c = rows[ticker(t, row, c_ticker)][d];
            c += core::TweetCounts::from_classes(label == -1, label == 0, label == 1);
        }
    } else {
        throw ParseError(t.source, 1, "tweet file needs columns date,ticker,neg,neu,pos or timestamp,ticker,label");
    }
    if (t.rows.empty()) out.warnings.push_back(path.string() + ": no tweet rows");
    for (auto& [name, by_date] : rows) {
        std::vector<Date> d;
        std::vector<core::TweetCounts> c;
        for (const auto& [k, v] : by_date) {
            d.push_back(k);
            c.push_back(v);
        }
        out.series.emplace(name, core::TweetDailySeries(name, std::move(d), std::move(c)));
    }
    return out;
}

Dataset load_dataset(const std::filesystem::path& prices_path, const std::filesystem::path& tweets_path,
                     const std::filesystem::path& market_path, const std::string& market_ticker) {
    Dataset data;
    auto prices = read_prices(prices_path);
    data.warnings = prices.warnings;
    if (!market_path.empty()) {
        auto m = read_prices(market_path);
        data.warnings.insert(data.warnings.end(), m.warnings.begin(), m.warnings.end());
        const auto it = m.series.find(market_ticker);
        if (it != m.series.end()) {
            data.market = it->second;
        } else if (m.series.size() == 1) {
            data.market = m.series.begin()->second;
        } else if (!m.series.empty()) {
            throw ValidationError("market file has no rows for ticker " + market_ticker);
        }
    }
    for (auto& [name, s] : prices.series) {
        if (name == market_ticker) {
            if (!data.market) data.market = s;
        } else {
            data.prices.emplace(name, s);
        }
    }
    if (!tweets_path.empty()) {
        auto tw = read_tweets(tweets_path);
        data.warnings.insert(data.warnings.end(), tw.warnings.begin(), tw.warnings.end());
        data.tweets = std::move(tw.series);
    }
    return data;
}

std::vector<std::string> analysable_tickers(const Dataset& data) {
    std::vector<std::string> out;
    if (!data.market) return out;
    for (const auto& [name, s] : data.prices) {
        if (data.tweets.count(name)) out.push_back(name);
    }
    return out;
}

core::AlignedPanel panel_for(const Dataset& data, const std::string& ticker) {
    if (!data.market) throw ValidationError("no market index series");
    const auto p = data.prices.find(ticker);
    const auto t = data.tweets.find(ticker);
    if (p == data.prices.end() || t == data.tweets.end()) {
        throw ValidationError("ticker " + ticker + " lacks prices or tweets");
    }
    return core::align(core::compute_returns(p->second), t->second, core::compute_returns(*data.market));
}

}  // namespace tweetmarket::cli
