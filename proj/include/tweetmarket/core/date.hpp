#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace tweetmarket::core {

/// Calendar date with day resolution. Ordered, hashable, and cheap to copy.
class Date {
public:
    constexpr Date() = default;
    constexpr explicit Date(std::chrono::sys_days days) : days_(days) {}
    constexpr Date(int year, unsigned month, unsigned day)
        : days_(std::chrono::year_month_day{std::chrono::year{year}, std::chrono::month{month},
                                            std::chrono::day{day}}) {}

    /// Parses `YYYY-MM-DD`. Throws ValidationError on malformed or impossible dates.
    static Date parse(std::string_view iso);

    constexpr std::chrono::sys_days days() const { return days_; }
    constexpr std::int64_t serial() const { return days_.time_since_epoch().count(); }

    std::string to_string() const;

    /// Monday = 1 ... Sunday = 7.
    unsigned iso_weekday() const { return std::chrono::weekday{days_}.iso_encoding(); }

    constexpr Date plus_days(std::int64_t n) const {
        return Date{days_ + std::chrono::days{n}};
    }

    friend constexpr std::int64_t days_between(Date from, Date to) {
        return (to.days_ - from.days_).count();
    }

    friend constexpr auto operator<=>(const Date&, const Date&) = default;

private:
    std::chrono::sys_days days_{};
};

}  // namespace tweetmarket::core

template <>
struct std::hash<tweetmarket::core::Date> {
    std::size_t operator()(const tweetmarket::core::Date& d) const noexcept {
        return std::hash<std::int64_t>{}(d.serial());
    }
};
