#include "tweetmarket/core/date.hpp"

#include <charconv>
#include <cstdio>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::core {

namespace {

template <typename T>
bool parse_int(std::string_view s, T& out) {
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

Date Date::parse(std::string_view iso) {
    int y = 0;
    unsigned m = 0;
    unsigned d = 0;
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-' || !parse_int(iso.substr(0, 4), y) ||
        !parse_int(iso.substr(5, 2), m) || !parse_int(iso.substr(8, 2), d)) {
        throw ValidationError("malformed date '" + std::string(iso) + "', expected YYYY-MM-DD");
    }
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                          std::chrono::day{d}};
    if (!ymd.ok()) throw ValidationError("invalid calendar date '" + std::string(iso) + "'");
    return Date{std::chrono::sys_days{ymd}};
}

std::string Date::to_string() const {
    const std::chrono::year_month_day ymd{days_};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

}  // namespace tweetmarket::core
