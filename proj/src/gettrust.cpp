#include "wot/gettrust.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace wot {

std::int64_t gettrust(const EventLog& log, UserId viewer, UserId target, Timestamp cutoff) {
    if (viewer == target) throw std::invalid_argument("gettrust: viewer and target are the same user");
    if (!log.contains(viewer)) throw std::invalid_argument("gettrust: unknown viewer " + std::to_string(viewer));
    if (!log.contains(target)) throw std::invalid_argument("gettrust: unknown target " + std::to_string(target));

    // Later events overwrite earlier ones, so each map ends up with the latest rating.
    std::unordered_map<UserId, int> from_viewer;
    std::unordered_map<UserId, int> to_target;
    for (const auto& e : log.events().first(log.prefix_length(cutoff))) {
        if (e.rater == viewer) from_viewer[e.ratee] = e.score;
        if (e.ratee == target) to_target[e.rater] = e.score;
    }

    std::int64_t trust = 0;
    if (auto direct = from_viewer.find(target); direct != from_viewer.end()) trust += direct->second;
    for (const auto& [intermediary, first_hop] : from_viewer) {
        if (intermediary == target || first_hop <= 0) continue;
        auto second = to_target.find(intermediary);
        if (second == to_target.end()) continue;
        const int capped = std::min(first_hop, std::abs(second->second));
        trust += second->second > 0 ? capped : -capped;
    }
    return trust;
}

}  // namespace wot
