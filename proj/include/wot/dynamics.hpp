#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "wot/calendar.hpp"
#include "wot/category.hpp"
#include "wot/metrics.hpp"

namespace wot {

/// Cumulative network state at the end of one local day.
class SnapshotState {
public:
    Day day() const { return day_; }

    /// Dense indices (into EventLog::users()) of every user seen so far,
    /// in order of first appearance.
    std::span<const std::uint32_t> seen() const { return seen_; }
    UserId user(std::uint32_t index) const { return users_[index]; }
    const NodeMetrics& metrics(std::uint32_t index) const { return metrics_[index]; }

    MetricsMap to_map() const;

private:
    friend class SnapshotFold;
    Day day_;
    std::span<const UserId> users_;
    std::vector<NodeMetrics> metrics_;
    std::vector<std::uint32_t> seen_;
    std::vector<char> is_seen_;
};

/// Folds a log into daily cumulative snapshots without recomputing from scratch.
class SnapshotFold {
public:
    explicit SnapshotFold(const EventLog& log, int tz_shift_hours = 0);

    /// Calls `visit` once per day from the first to the last event day, after
    /// all of that day's events have been applied.
    void run(const std::function<void(const SnapshotState&)>& visit) const;

    std::size_t day_count() const;

private:
    const EventLog& log_;
    int tz_shift_hours_;
};

struct Snapshot {
    Day day;
    MetricsMap metrics;
};

/// Materialized snapshots. Memory grows as days x users; prefer SnapshotFold
/// for large logs. Throws std::invalid_argument on an empty log.
std::vector<Snapshot> snapshot_series(const EventLog& log, int tz_shift_hours = 0);

/// Gini index over ascending-sorted values. Throws std::invalid_argument when
/// the input is empty, holds a negative value, or sums to zero.
double gini(std::span<const double> values);

enum class GiniPopulation {
    positive_only,  // users whose value on the layer is > 0
    all_seen,       // every user seen so far, zeros included
};

struct GiniRow {
    Day day;
    std::optional<double> gini_plus;
    std::optional<double> gini_minus;
};

/// Daily Gini of rho_plus and rho_minus. A column is empty on days with fewer
/// than two qualifying users; days with both columns empty are omitted.
std::vector<GiniRow> gini_series(const EventLog& log, int tz_shift_hours = 0,
                                 GiniPopulation population = GiniPopulation::positive_only);

/// Prefix-averaged Jaccard of two rankings: the mean over depths d = 1..k of
/// |A_d n B_d| / |A_d u B_d|, where X_d is the first d entries of X.
/// Throws std::invalid_argument if k == 0, a list is longer than k, or a list
/// repeats an entry.
double extended_jaccard(std::span<const UserId> a, std::span<const UserId> b, std::size_t k);
double extended_jaccard(std::span<const UserId> a, std::span<const UserId> b);

/// Plain Jaccard of the two lists as sets; 1 when both are empty.
double set_jaccard(std::span<const UserId> a, std::span<const UserId> b);

enum class ReputationKey { positive, negative, global };

/// Top-k users by descending value, ascending id on ties. Positive and
/// negative lists only admit users with a non-zero value on that layer.
std::vector<UserId> top_k(const SnapshotState& state, ReputationKey key, std::size_t k);

struct StabilityRow {
    Day day;  // day t+1 of the compared pair
    double j_plus = 0, j_minus = 0, j_global = 0;
    double set_plus = 0, set_minus = 0, set_global = 0;
    bool truncated = false;  // some list held fewer than k users
};

/// Similarity of consecutive daily top-k lists. Throws if k == 0.
std::vector<StabilityRow> topk_stability_series(const EventLog& log, std::size_t k = 10, int tz_shift_hours = 0);

/// Users present in the daily top-k of the key on at least one day.
std::set<UserId> top_k_entrants(const EventLog& log, ReputationKey key, std::size_t k = 10, int tz_shift_hours = 0);

struct Trajectory {
    UserId user = 0;
    std::vector<std::int64_t> values;  // rho after each incoming event
    CategoryLabel category = CategoryLabel::uncategorized;

    /// Average change of rho per incoming event.
    double slope() const;
};

enum class TrajectorySelection { top_k_positive, top_k_negative, by_category };

/// Flattened reputation trajectories, ordered by user id. `by_category`
/// returns every user holding one of the three category labels at the end.
std::vector<Trajectory> trajectories(const EventLog& log, TrajectorySelection selection, std::size_t k = 10,
                                     const CategoryThresholds& thresholds = {}, int tz_shift_hours = 0);

}  // namespace wot
