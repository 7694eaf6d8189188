#include "wot/event_log.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <zlib.h>

namespace wot {

std::string validate(const RatingEvent& event) {
    if (event.score == 0) return "score is zero";
    if (event.score < -10 || event.score > 10) {
        return "score " + std::to_string(event.score) + " outside [-10, 10]";
    }
    if (event.rater == event.ratee) return "self-rating by user " + std::to_string(event.rater);
    return {};
}

EventLog::EventLog(std::vector<RatingEvent> events) : events_(std::move(events)) {
    for (const auto& e : events_) {
        if (auto reason = validate(e); !reason.empty()) throw std::invalid_argument(reason);
    }
    std::stable_sort(events_.begin(), events_.end(),
                     [](const RatingEvent& a, const RatingEvent& b) { return a.time < b.time; });
    users_.reserve(events_.size());
    for (const auto& e : events_) {
        users_.push_back(e.rater);
        users_.push_back(e.ratee);
    }
    std::sort(users_.begin(), users_.end());
    users_.erase(std::unique(users_.begin(), users_.end()), users_.end());
    index_.reserve(users_.size());
    for (std::size_t i = 0; i < users_.size(); ++i) index_.emplace(users_[i], i);
}

std::size_t EventLog::prefix_length(Timestamp cutoff) const {
    auto it = std::upper_bound(events_.begin(), events_.end(), cutoff,
                               [](Timestamp c, const RatingEvent& e) { return c < e.time; });
    return static_cast<std::size_t>(it - events_.begin());
}

EventLog EventLog::truncated(Timestamp cutoff) const {
    const auto n = prefix_length(cutoff);
    return EventLog(std::vector<RatingEvent>(events_.begin(), events_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Timestamp EventLog::first_time() const {
    if (events_.empty()) throw std::logic_error("empty event log has no first time");
    return events_.front().time;
}

Timestamp EventLog::last_time() const {
    if (events_.empty()) throw std::logic_error("empty event log has no last time");
    return events_.back().time;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

template <typename Int>
bool parse_integer(std::string_view text, Int& out) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size() && !text.empty();
}

bool parse_timestamp(std::string_view text, Timestamp& out) {
    if (parse_integer(text, out)) return true;
    // Public dumps store fractional epoch seconds.
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || !std::isfinite(value)) {
        return false;
    }
    if (text.find_first_of("eEnN") != std::string_view::npos) return false;
    out = static_cast<Timestamp>(std::floor(value));
    return true;
}

bool looks_numeric(std::string_view field) {
    if (!field.empty() && (field.front() == '-' || field.front() == '+')) field.remove_prefix(1);
    return !field.empty() && std::isdigit(static_cast<unsigned char>(field.front()));
}

}  // namespace

RatingEvent parse_record(std::string_view line) {
    auto fields = split_fields(trim(line));
    if (fields.size() != 4) {
        throw IngestError("expected 4 fields, found " + std::to_string(fields.size()));
    }
    RatingEvent e;
    if (!parse_integer(fields[0], e.rater)) throw IngestError("rater is not an integer: '" + std::string(fields[0]) + "'");
    if (!parse_integer(fields[1], e.ratee)) throw IngestError("ratee is not an integer: '" + std::string(fields[1]) + "'");
    if (!parse_integer(fields[2], e.score)) throw IngestError("score is not an integer: '" + std::string(fields[2]) + "'");
    if (!parse_timestamp(fields[3], e.time)) throw IngestError("timestamp is not numeric: '" + std::string(fields[3]) + "'");
    if (auto reason = validate(e); !reason.empty()) throw IngestError(reason);
    return e;
}

IngestResult ingest(std::istream& in, IngestMode mode) {
    IngestReport report;
    std::vector<RatingEvent> events;
    std::string line;
    std::size_t line_no = 0;
    bool any_bytes = false;
    bool first_record = true;
    while (std::getline(in, line)) {
        ++line_no;
        any_bytes = true;
        auto body = trim(line);
        if (body.empty()) continue;
        if (first_record) {
            first_record = false;
            if (!looks_numeric(split_fields(body).front())) {
                report.header_skipped = true;
                continue;
            }
        }
        try {
            events.push_back(parse_record(body));
        } catch (const IngestError& err) {
            if (mode == IngestMode::strict) {
                throw IngestError("line " + std::to_string(line_no) + ": " + err.what());
            }
            ++report.rejected;
            report.diagnostics.push_back({line_no, err.what()});
        }
    }
    if (!any_bytes) throw IngestError("empty input");
    report.kept = events.size();
    IngestResult result{EventLog(std::move(events)), std::move(report)};
    result.report.users = result.log.users().size();
    return result;
}

IngestResult ingest_file(const std::filesystem::path& path, IngestMode mode) {
    if (!std::filesystem::exists(path)) throw IngestError("input file not found: " + path.string());
    gzFile file = gzopen(path.c_str(), "rb");
    if (file == nullptr) throw IngestError("cannot open input file: " + path.string());
    std::string contents;
    char buffer[1 << 16];
    int n = 0;
    while ((n = gzread(file, buffer, sizeof buffer)) > 0) contents.append(buffer, static_cast<std::size_t>(n));
    int errnum = Z_OK;
    const char* message = gzerror(file, &errnum);
    std::string error = (n < 0 && message != nullptr) ? message : "";
    gzclose(file);
    if (n < 0) throw IngestError("failed to read " + path.string() + ": " + error);
    std::istringstream in(contents);
    return ingest(in, mode);
}

}  // namespace wot
