#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wot/event_log.hpp"

namespace wot {

struct WeightedEdge {
    UserId source = 0;  // rater
    UserId target = 0;  // ratee
    int weight = 0;     // |score|, in [1, 10]
    Timestamp time = 0;
};

/// Multigraph projection of one layer: every rating event is an edge.
struct LayerView {
    Layer layer = Layer::rewarding;
    Timestamp cutoff = kEndOfTime;
    std::vector<WeightedEdge> edges;

    std::size_t size() const { return edges.size(); }
    bool empty() const { return edges.empty(); }
};

struct LayerPair {
    LayerView rewarding;
    LayerView punitive;

    const LayerView& operator[](Layer layer) const { return layer == Layer::rewarding ? rewarding : punitive; }
};

constexpr Layer layer_of(int score) { return score > 0 ? Layer::rewarding : Layer::punitive; }

LayerPair split_layers(const EventLog& log, Timestamp cutoff = kEndOfTime);

/// Sub-layer keeping only edges whose weight satisfies the predicate.
LayerView filter_weights(const LayerView& view, const std::function<bool(int)>& keep);

}  // namespace wot
