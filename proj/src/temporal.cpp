#include "wot/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wot/layers.hpp"

namespace wot {

std::vector<DailyCount> daily_series(const EventLog& log, int tz_shift_hours) {
    check_tz_shift(tz_shift_hours);
    std::vector<DailyCount> out;
    if (log.empty()) return out;
    const Day first = day_of(log.first_time(), tz_shift_hours);
    const Day last = day_of(log.last_time(), tz_shift_hours);
    out.resize(static_cast<std::size_t>(last.index - first.index + 1));
    for (std::size_t i = 0; i < out.size(); ++i) out[i].day = Day{first.index + static_cast<std::int64_t>(i)};
    for (const auto& e : log.events()) {
        auto& row = out[static_cast<std::size_t>(day_of(e.time, tz_shift_hours).index - first.index)];
        ++(e.score > 0 ? row.count_plus : row.count_minus);
    }
    return out;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    fields.push_back(field);
    for (auto& f : fields) {
        const auto b = f.find_first_not_of(" \t");
        const auto e = f.find_last_not_of(" \t");
        f = b == std::string::npos ? "" : f.substr(b, e - b + 1);
    }
    return fields;
}

}  // namespace

std::vector<AnnotationWindow> parse_annotations(std::istream& in) {
    std::vector<AnnotationWindow> windows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto fields = split_csv(line);
        if (fields.size() == 1 && fields[0].empty()) continue;
        if (fields.size() != 3) {
            throw std::invalid_argument("annotation line " + std::to_string(line_no) + ": expected label,start_date,end_date");
        }
        AnnotationWindow w;
        w.label = fields[0];
        try {
            w.start = Day::parse_iso(fields[1]);
            w.end = Day::parse_iso(fields[2]);
        } catch (const std::invalid_argument&) {
            if (line_no == 1 && windows.empty()) continue;  // header
            throw;
        }
        if (w.end < w.start) {
            throw std::invalid_argument("annotation line " + std::to_string(line_no) + ": start after end");
        }
        windows.push_back(std::move(w));
    }
    return windows;
}

std::vector<AnnotationWindow> load_annotations(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open annotation file " + path.string());
    return parse_annotations(in);
}

std::string annotation_for(Day day, std::span<const AnnotationWindow> windows) {
    for (const auto& w : windows) {
        if (w.contains(day)) return w.label;
    }
    return {};
}

ActiveDays activity_calendar(const EventLog& log, int tz_shift_hours) {
    check_tz_shift(tz_shift_hours);
    std::set<Day> plus, minus;
    for (const auto& e : log.events()) (e.score > 0 ? plus : minus).insert(day_of(e.time, tz_shift_hours));
    return {{plus.begin(), plus.end()}, {minus.begin(), minus.end()}};
}

std::map<UserId, std::vector<std::int64_t>> per_user_interevents(const EventLog& log, Layer layer) {
    std::map<UserId, Timestamp> last_seen;
    std::map<UserId, std::vector<std::int64_t>> out;
    for (const auto& e : log.events()) {
        if (layer_of(e.score) != layer) continue;
        auto [it, first] = last_seen.try_emplace(e.ratee, e.time);
        if (!first) {
            out[e.ratee].push_back(e.time - it->second);
            it->second = e.time;
        }
    }
    return out;
}

std::vector<std::int64_t> interevent_times(const EventLog& log, Layer layer) {
    std::vector<std::int64_t> pooled;
    for (const auto& [user, deltas] : per_user_interevents(log, layer)) {
        pooled.insert(pooled.end(), deltas.begin(), deltas.end());
    }
    return pooled;
}

IntereventDistribution interevent_distribution(const EventLog& log, Layer layer) {
    IntereventDistribution out;
    const auto deltas = interevent_times(log, layer);
    out.n_samples = deltas.size();
    if (deltas.empty()) return out;
    out.distribution = make_distribution(deltas);
    out.binned = log_bins(deltas);
    return out;
}

double burstiness(std::span<const double> deltas) {
    if (deltas.size() < 2) throw std::invalid_argument("burstiness needs at least 2 interevent times");
    const double n = static_cast<double>(deltas.size());
    const double mean = std::accumulate(deltas.begin(), deltas.end(), 0.0) / n;
    double var = 0;
    for (double d : deltas) var += (d - mean) * (d - mean);
    const double sigma = std::sqrt(var / n);
    if (sigma + mean == 0) throw std::invalid_argument("burstiness undefined when every interevent time is zero");
    return (sigma - mean) / (sigma + mean);
}

double burstiness(std::span<const std::int64_t> deltas) {
    std::vector<double> values(deltas.begin(), deltas.end());
    return burstiness(values);
}

std::vector<YearlyBurstiness> yearly_burstiness(const EventLog& log, int tz_shift_hours) {
    check_tz_shift(tz_shift_hours);
    std::map<int, std::vector<RatingEvent>> by_year;
    for (const auto& e : log.events()) by_year[day_of(e.time, tz_shift_hours).year()].push_back(e);
    std::vector<YearlyBurstiness> out;
    for (auto& [year, events] : by_year) {
        const EventLog slice(std::move(events));
        for (auto layer : {Layer::rewarding, Layer::punitive}) {
            const auto deltas = interevent_times(slice, layer);
            if (deltas.size() < 2) continue;
            if (std::all_of(deltas.begin(), deltas.end(), [](std::int64_t d) { return d == 0; })) continue;
            out.push_back({year, layer, burstiness(deltas), deltas.size()});
        }
    }
    return out;
}

namespace {

template <typename Bucket>
ActivityProfile profile(const EventLog& log, int tz_shift_hours, std::size_t buckets, Bucket bucket_of) {
    check_tz_shift(tz_shift_hours);
    ActivityProfile p;
    p.tz_shift_hours = tz_shift_hours;
    p.rewarding.assign(buckets, 0.0);
    p.punitive.assign(buckets, 0.0);
    double plus = 0, minus = 0;
    for (const auto& e : log.events()) {
        const auto b = static_cast<std::size_t>(bucket_of(e.time));
        if (e.score > 0) {
            p.rewarding[b] += 1;
            plus += 1;
        } else {
            p.punitive[b] += 1;
            minus += 1;
        }
    }
    p.rewarding_empty = plus == 0;
    p.punitive_empty = minus == 0;
    for (auto& v : p.rewarding) v = plus > 0 ? v / plus : 0.0;
    for (auto& v : p.punitive) v = minus > 0 ? v / minus : 0.0;
    return p;
}

}  // namespace

ActivityProfile circadian_profile(const EventLog& log, int tz_shift_hours) {
    return profile(log, tz_shift_hours, 24, [&](Timestamp t) { return hour_of(t, tz_shift_hours); });
}

ActivityProfile weekly_profile(const EventLog& log, int tz_shift_hours) {
    return profile(log, tz_shift_hours, 7, [&](Timestamp t) { return day_of(t, tz_shift_hours).weekday(); });
}

}  // namespace wot
