#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "wot/layers.hpp"

namespace wot {

/// Simple undirected graph over a dense node index. Adjacency lists are sorted.
struct SimpleGraph {
    std::vector<UserId> nodes;
    std::vector<std::vector<std::uint32_t>> adjacency;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t degree(std::size_t i) const { return adjacency[i].size(); }
    std::size_t edge_count() const;
};

/// Directed graph without parallel edges or self-loops.
struct DirectedGraph {
    using Edge = std::pair<std::uint32_t, std::uint32_t>;

    std::vector<UserId> nodes;
    std::vector<Edge> edges;

    std::vector<std::int64_t> in_degrees() const;
    std::vector<std::int64_t> out_degrees() const;
};

/// Collapses parallel edges and directions. Nodes are the layer's endpoints
/// plus `extra_nodes`, which enter as isolated vertices if not already present.
SimpleGraph undirected_projection(const LayerView& layer, std::span<const UserId> extra_nodes = {});

/// Collapses parallel edges of the same direction.
DirectedGraph directed_projection(const LayerView& layer);

/// Undirected simple graph induced by a directed graph on the same node list.
SimpleGraph undirected_projection(const DirectedGraph& graph);

/// Triangles through each node.
std::vector<std::int64_t> triangle_counts(const SimpleGraph& graph);

struct RewireStats {
    std::uint64_t attempts = 0;
    std::uint64_t swaps = 0;
    bool reached_target = false;
};

/// Degree-preserving endpoint swaps: (a->b, c->d) becomes (a->d, c->b).
/// Proposals creating a self-loop or an existing edge are rejected and
/// redrawn. Stops after `target_swaps` accepted swaps or `max_attempts`
/// proposals, whichever comes first.
RewireStats rewire_directed(DirectedGraph& graph, std::uint64_t target_swaps, std::uint64_t max_attempts,
                            std::mt19937_64& rng);

}  // namespace wot
