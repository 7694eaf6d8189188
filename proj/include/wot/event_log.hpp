#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wot/types.hpp"

namespace wot {

/// One timestamped directed rating.
struct RatingEvent {
    UserId rater = 0;
    UserId ratee = 0;
    int score = 0;  // [-10, -1] or [1, 10]
    Timestamp time = 0;

    bool operator==(const RatingEvent&) const = default;
};

/// Empty string when the event is admissible, otherwise the reason it is not.
std::string validate(const RatingEvent& event);

/// Immutable, time-ordered sequence of rating events.
///
/// Events are stably sorted by timestamp on construction, so events sharing a
/// timestamp keep their input order. Construction throws std::invalid_argument
/// on any event that fails validate().
class EventLog {
public:
    EventLog() = default;
    explicit EventLog(std::vector<RatingEvent> events);

    std::span<const RatingEvent> events() const { return events_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }

    /// Distinct ids across all rater/ratee fields, ascending.
    std::span<const UserId> users() const { return users_; }
    bool contains(UserId user) const { return index_.contains(user); }

    /// Events with time <= cutoff form a prefix; this is its length.
    std::size_t prefix_length(Timestamp cutoff) const;

    /// Log holding only the events with time <= cutoff.
    EventLog truncated(Timestamp cutoff) const;

    Timestamp first_time() const;
    Timestamp last_time() const;

    /// Position of a user in users(). Throws std::out_of_range for unknown ids.
    std::size_t dense_index(UserId user) const { return index_.at(user); }

private:
    std::vector<RatingEvent> events_;
    std::vector<UserId> users_;
    std::unordered_map<UserId, std::size_t> index_;
};

enum class IngestMode { lenient, strict };

struct IngestDiagnostic {
    std::size_t line = 0;  // 1-based
    std::string reason;
};

struct IngestReport {
    std::size_t kept = 0;
    std::size_t rejected = 0;
    std::size_t users = 0;
    bool header_skipped = false;
    std::vector<IngestDiagnostic> diagnostics;
};

struct IngestResult {
    EventLog log;
    IngestReport report;
};

class IngestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses `rater,ratee,score,epoch_seconds` records.
///
/// A first line whose first field is non-numeric is treated as a header. The
/// timestamp may carry a fractional part, which is truncated toward negative
/// infinity. Blank lines are ignored. Bad records are skipped and reported in
/// lenient mode; in strict mode the first bad record throws IngestError.
/// Input with no bytes at all throws IngestError in both modes.
IngestResult ingest(std::istream& in, IngestMode mode = IngestMode::lenient);

/// Same as the stream overload; transparently reads gzip-compressed files.
IngestResult ingest_file(const std::filesystem::path& path, IngestMode mode = IngestMode::lenient);

/// Parses a single record. Throws IngestError with the reason on failure.
RatingEvent parse_record(std::string_view line);

}  // namespace wot
