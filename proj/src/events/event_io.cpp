#include "tweetmarket/events/event_io.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "tweetmarket/core/csv.hpp"
#include "tweetmarket/core/error.hpp"

namespace tweetmarket::events {

namespace {

double parse_number(const core::CsvTable& t, const core::CsvRow& row, std::size_t col) {
    const auto s = core::trim(row.fields[col]);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(t.source, row.line, "not a number: '" + std::string(s) + "'");
    }
    return v;
}

core::Date parse_date(const core::CsvTable& t, const core::CsvRow& row, std::size_t col) {
    try {
        return core::Date::parse(core::trim(row.fields[col]));
    } catch (const ValidationError& e) {
        throw ParseError(t.source, row.line, e.what());
    }
}

}  // namespace

std::vector<EaDate> read_ea_dates(const std::filesystem::path& path) {
    const auto t = core::read_csv(path);
    const auto c_ticker = t.require_column("ticker");
    const auto c_date = t.require_column("date");
    std::vector<EaDate> out;
    for (const auto& row : t.rows) {
        out.push_back({std::string(core::trim(row.fields[c_ticker])), parse_date(t, row, c_date)});
    }
    return out;
}

void write_events_csv(std::ostream& out, const std::vector<Event>& events) {
    out << "ticker,date,phi,polarity_value,polarity_class,is_ea\n";
    for (const auto& e : events) {
        out << core::csv_escape(e.ticker) << ',' << e.date.to_string() << ',' << core::format_double(e.phi)
            << ',' << (e.polarity ? core::format_double(*e.polarity) : "") << ','
            << to_string(e.polarity_class) << ',' << (e.is_ea ? "true" : "false") << '\n';
    }
}

std::vector<Event> read_events_csv(const std::filesystem::path& path) {
    const auto t = core::read_csv(path);
    const auto c_ticker = t.require_column("ticker");
    const auto c_date = t.require_column("date");
    const auto c_phi = t.require_column("phi");
    const auto c_pol = t.require_column("polarity_value");
    const auto c_class = t.require_column("polarity_class");
    const auto c_ea = t.require_column("is_ea");
    std::vector<Event> out;
    for (const auto& row : t.rows) {
        Event e;
        e.ticker = std::string(core::trim(row.fields[c_ticker]));
        e.date = parse_date(t, row, c_date);
        e.phi = parse_number(t, row, c_phi);
        if (!core::trim(row.fields[c_pol]).empty()) e.polarity = parse_number(t, row, c_pol);
        try {
            e.polarity_class = parse_polarity_class(core::trim(row.fields[c_class]));
        } catch (const ValidationError& err) {
            throw ParseError(t.source, row.line, err.what());
        }
        const auto ea = core::trim(row.fields[c_ea]);
        if (ea == "true" || ea == "1") {
            e.is_ea = true;
        } else if (ea == "false" || ea == "0") {
            e.is_ea = false;
        } else {
            throw ParseError(t.source, row.line, "is_ea must be true or false");
        }
        out.push_back(std::move(e));
    }
    return out;
}

void write_polarity_histogram(std::ostream& out, const std::vector<Event>& events, int bins) {
    if (bins < 1) throw ValidationError("histogram needs at least one bin");
    std::vector<long> counts(std::size_t(bins), 0);
    long missing = 0;
    for (const auto& e : events) {
        if (!e.polarity) {
            ++missing;
            continue;
        }
        auto b = static_cast<int>((*e.polarity + 1.0) / 2.0 * bins);
        b = std::clamp(b, 0, bins - 1);
        ++counts[std::size_t(b)];
    }
    out << "bin_lower,bin_upper,count\n";
    for (int b = 0; b < bins; ++b) {
        out << core::format_double(-1.0 + 2.0 * b / bins) << ',' << core::format_double(-1.0 + 2.0 * (b + 1) / bins)
            << ',' << counts[std::size_t(b)] << '\n';
    }
    out << "missing,missing," << missing << '\n';
}

}  // namespace tweetmarket::events
