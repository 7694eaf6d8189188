#include "wot/layers.hpp"

#include <cstdlib>

namespace wot {

LayerPair split_layers(const EventLog& log, Timestamp cutoff) {
    LayerPair pair;
    pair.rewarding = {Layer::rewarding, cutoff, {}};
    pair.punitive = {Layer::punitive, cutoff, {}};
    const auto n = log.prefix_length(cutoff);
    for (const auto& e : log.events().first(n)) {
        auto& view = e.score > 0 ? pair.rewarding : pair.punitive;
        view.edges.push_back({e.rater, e.ratee, std::abs(e.score), e.time});
    }
    return pair;
}

LayerView filter_weights(const LayerView& view, const std::function<bool(int)>& keep) {
    LayerView out{view.layer, view.cutoff, {}};
    for (const auto& edge : view.edges) {
        if (keep(edge.weight)) out.edges.push_back(edge);
    }
    return out;
}

}  // namespace wot
