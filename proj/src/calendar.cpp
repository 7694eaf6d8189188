#include "wot/calendar.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace wot {

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::chrono::sys_days as_sys_days(const Day& d) {
    return std::chrono::sys_days{std::chrono::days{d.index}};
}

int parse_int(std::string_view text, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("invalid ISO date: '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

int Day::year() const {
    return static_cast<int>(std::chrono::year_month_day{as_sys_days(*this)}.year());
}

int Day::weekday() const {
    return static_cast<int>(std::chrono::weekday{as_sys_days(*this)}.iso_encoding()) - 1;
}

std::string Day::iso() const {
    std::chrono::year_month_day ymd{as_sys_days(*this)};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

Day Day::parse_iso(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        throw std::invalid_argument("invalid ISO date: '" + std::string(text) + "'");
    }
    std::chrono::year_month_day ymd{std::chrono::year{parse_int(text.substr(0, 4), text)},
                                    std::chrono::month{static_cast<unsigned>(parse_int(text.substr(5, 2), text))},
                                    std::chrono::day{static_cast<unsigned>(parse_int(text.substr(8, 2), text))}};
    if (!ymd.ok()) throw std::invalid_argument("invalid ISO date: '" + std::string(text) + "'");
    return Day{std::chrono::sys_days{ymd}.time_since_epoch().count()};
}

void check_tz_shift(int tz_shift_hours) {
    if (tz_shift_hours < -12 || tz_shift_hours > 14) {
        throw std::invalid_argument("timezone shift must lie in [-12, 14] hours, got " +
                                    std::to_string(tz_shift_hours));
    }
}

Day day_of(Timestamp t, int tz_shift_hours) {
    return Day{floor_div(local_seconds(t, tz_shift_hours), kSecondsPerDay)};
}

int hour_of(Timestamp t, int tz_shift_hours) {
    const std::int64_t local = local_seconds(t, tz_shift_hours);
    return static_cast<int>((local - floor_div(local, kSecondsPerDay) * kSecondsPerDay) / 3600);
}

}  // namespace wot
