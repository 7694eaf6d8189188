#pragma once

#include <cstdint>
#include <map>

#include "wot/event_log.hpp"

namespace wot {

/// Degrees and reputations of one user. Degrees count events (multigraph).
struct NodeMetrics {
    std::int64_t k_in_plus = 0;
    std::int64_t k_in_minus = 0;
    std::int64_t k_out_plus = 0;
    std::int64_t k_out_minus = 0;
    std::int64_t rho_plus = 0;   // sum of incoming positive weights
    std::int64_t rho_minus = 0;  // sum of incoming negative weights, as magnitudes
    std::int64_t rho = 0;        // rho_plus - rho_minus

    std::int64_t k_in() const { return k_in_plus + k_in_minus; }
    std::int64_t k_out() const { return k_out_plus + k_out_minus; }

    /// Folds one event into the rater's or ratee's counters.
    void add_incoming(int score);
    void add_outgoing(int score);

    bool operator==(const NodeMetrics&) const = default;
};

using MetricsMap = std::map<UserId, NodeMetrics>;

/// Metrics for every user appearing in an event with time <= cutoff.
MetricsMap node_metrics(const EventLog& log, Timestamp cutoff = kEndOfTime);

}  // namespace wot
