#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wot/calendar.hpp"
#include "wot/distribution.hpp"
#include "wot/event_log.hpp"

namespace wot {

struct DailyCount {
    Day day;
    std::int64_t count_plus = 0;
    std::int64_t count_minus = 0;
};

/// Event counts per local day, contiguous from the first to the last event
/// day with empty days zero-filled. Empty log gives an empty series.
std::vector<DailyCount> daily_series(const EventLog& log, int tz_shift_hours = 0);

/// Labeled date range, both ends inclusive.
struct AnnotationWindow {
    std::string label;
    Day start;
    Day end;

    bool contains(Day d) const { return start <= d && d <= end; }
};

/// Reads `label,start_date,end_date` lines with ISO dates. A header line is
/// skipped when its second field is not a date. Throws std::invalid_argument
/// on malformed lines or start > end.
std::vector<AnnotationWindow> parse_annotations(std::istream& in);
std::vector<AnnotationWindow> load_annotations(const std::filesystem::path& path);

/// Label of the first window containing the day, or an empty string.
std::string annotation_for(Day day, std::span<const AnnotationWindow> windows);

struct ActiveDays {
    std::vector<Day> rewarding;
    std::vector<Day> punitive;
};

/// Days with at least one event, per layer, ascending.
ActiveDays activity_calendar(const EventLog& log, int tz_shift_hours = 0);

/// Waiting times between consecutive events reaching each user on one layer.
std::map<UserId, std::vector<std::int64_t>> per_user_interevents(const EventLog& log, Layer layer);

/// All users' waiting times pooled, ordered by user then time.
std::vector<std::int64_t> interevent_times(const EventLog& log, Layer layer);

struct IntereventDistribution {
    Distribution distribution;   // empty support when there are no samples
    std::vector<LogBin> binned;  // over positive waiting times
    std::size_t n_samples = 0;
};

/// Pooled interevent distribution in seconds.
IntereventDistribution interevent_distribution(const EventLog& log, Layer layer);

/// (sigma - m) / (sigma + m) with the population standard deviation.
/// Throws std::invalid_argument with fewer than 2 samples or when all are zero.
double burstiness(std::span<const double> deltas);
double burstiness(std::span<const std::int64_t> deltas);

struct YearlyBurstiness {
    int year = 0;
    Layer layer = Layer::rewarding;
    double b = 0;
    std::size_t n_samples = 0;
};

/// Burstiness of each (year, layer) slice; waiting times are taken between
/// events that both fall in the year. Slices with < 2 samples are omitted.
std::vector<YearlyBurstiness> yearly_burstiness(const EventLog& log, int tz_shift_hours = 0);

/// Fractions of events per bucket. A layer without events yields a zero
/// vector and sets its `empty` flag.
struct ActivityProfile {
    int tz_shift_hours = 0;
    std::vector<double> rewarding;
    std::vector<double> punitive;
    bool rewarding_empty = false;
    bool punitive_empty = false;
};

/// 24 buckets, local hour of day.
ActivityProfile circadian_profile(const EventLog& log, int tz_shift_hours = 0);

/// 7 buckets, Monday first.
ActivityProfile weekly_profile(const EventLog& log, int tz_shift_hours = 0);

}  // namespace wot
