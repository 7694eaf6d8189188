#pragma once

#include <cstdint>

#include "wot/event_log.hpp"

namespace wot {

enum class ScoreModel {
    uniform,  // |score| uniform on 1..10
    norm,     // positives concentrated on 1, negatives on 10
};

enum class TargetModel {
    uniform,        // ratee uniform over the other users
    preferential,   // ratee chosen with probability proportional to (in-degree + 1)
};

struct SynthConfig {
    std::int64_t n_users = 100;
    std::int64_t n_events = 1000;
    double positive_fraction = 0.9;
    ScoreModel scores = ScoreModel::uniform;
    TargetModel targets = TargetModel::uniform;
    /// Global event arrivals form a Poisson process with this rate (events/second).
    double event_rate = 1.0 / 3600.0;
    Timestamp start_time = 1'293'840'000;  // 2011-01-01T00:00:00Z
    std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on out-of-range configuration.
void validate(const SynthConfig& config);

/// Deterministic for a fixed configuration. User ids are 1..n_users.
EventLog synth_log(const SynthConfig& config);

}  // namespace wot
