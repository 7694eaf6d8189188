#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "wot/types.hpp"

namespace wot {

/// A calendar day, stored as days since 1970-01-01 in some fixed zone.
struct Day {
    std::int64_t index = 0;

    auto operator<=>(const Day&) const = default;

    int year() const;
    /// ISO weekday, Monday = 0 ... Sunday = 6.
    int weekday() const;
    std::string iso() const;

    static Day parse_iso(std::string_view text);
};

/// Validates an hour offset against the range of real-world zones.
void check_tz_shift(int tz_shift_hours);

/// Seconds-of-epoch shifted into local time.
constexpr Timestamp local_seconds(Timestamp t, int tz_shift_hours) {
    return t + static_cast<Timestamp>(tz_shift_hours) * 3600;
}

Day day_of(Timestamp t, int tz_shift_hours = 0);

/// Local hour of day in [0, 24).
int hour_of(Timestamp t, int tz_shift_hours = 0);

}  // namespace wot
