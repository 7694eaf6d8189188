#pragma once

#include <cstdint>

#include "wot/event_log.hpp"

namespace wot {

/// Capped one-hop trust of `viewer` in `target`.
///
/// Uses the latest rating per ordered pair at the cutoff. Every intermediary j
/// the viewer currently rates positively contributes
/// sign(r(j, target)) * min(r(viewer, j), |r(j, target)|), and the viewer's own
/// latest rating of the target, if any, is added on top.
///
/// Throws std::invalid_argument when viewer == target or either user is
/// absent from the log.
std::int64_t gettrust(const EventLog& log, UserId viewer, UserId target, Timestamp cutoff = kEndOfTime);

}  // namespace wot
