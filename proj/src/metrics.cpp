#include "wot/metrics.hpp"

#include <cstdlib>

namespace wot {

void NodeMetrics::add_incoming(int score) {
    if (score > 0) {
        ++k_in_plus;
        rho_plus += score;
    } else {
        ++k_in_minus;
        rho_minus -= score;
    }
    rho = rho_plus - rho_minus;
}

void NodeMetrics::add_outgoing(int score) {
    if (score > 0) {
        ++k_out_plus;
    } else {
        ++k_out_minus;
    }
}

MetricsMap node_metrics(const EventLog& log, Timestamp cutoff) {
    MetricsMap out;
    for (const auto& e : log.events().first(log.prefix_length(cutoff))) {
        out[e.rater].add_outgoing(e.score);
        out[e.ratee].add_incoming(e.score);
    }
    return out;
}

}  // namespace wot
