#include "wot/graph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace wot {

namespace {

class NodeIndex {
public:
    std::uint32_t operator()(UserId id) {
        auto [it, inserted] = index_.try_emplace(id, static_cast<std::uint32_t>(nodes_.size()));
        if (inserted) nodes_.push_back(id);
        return it->second;
    }
    std::vector<UserId> take() { return std::move(nodes_); }

private:
    std::unordered_map<UserId, std::uint32_t> index_;
    std::vector<UserId> nodes_;
};

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

void sort_unique(std::vector<std::vector<std::uint32_t>>& adjacency) {
    for (auto& list : adjacency) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

}  // namespace

std::size_t SimpleGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& list : adjacency) twice += list.size();
    return twice / 2;
}

std::vector<std::int64_t> DirectedGraph::in_degrees() const {
    std::vector<std::int64_t> d(nodes.size(), 0);
    for (const auto& [s, t] : edges) ++d[t];
    return d;
}

std::vector<std::int64_t> DirectedGraph::out_degrees() const {
    std::vector<std::int64_t> d(nodes.size(), 0);
    for (const auto& [s, t] : edges) ++d[s];
    return d;
}

SimpleGraph undirected_projection(const LayerView& layer, std::span<const UserId> extra_nodes) {
    NodeIndex index;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(layer.edges.size());
    for (const auto& e : layer.edges) pairs.emplace_back(index(e.source), index(e.target));
    for (auto id : extra_nodes) index(id);
    SimpleGraph g;
    g.nodes = index.take();
    g.adjacency.resize(g.nodes.size());
    for (const auto& [a, b] : pairs) {
        if (a == b) continue;
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
    }
    sort_unique(g.adjacency);
    return g;
}

DirectedGraph directed_projection(const LayerView& layer) {
    NodeIndex index;
    DirectedGraph g;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& e : layer.edges) {
        const auto s = index(e.source);
        const auto t = index(e.target);
        if (s == t) continue;
        if (seen.insert(pair_key(s, t)).second) g.edges.emplace_back(s, t);
    }
    g.nodes = index.take();
    return g;
}

SimpleGraph undirected_projection(const DirectedGraph& graph) {
    SimpleGraph g;
    g.nodes = graph.nodes;
    g.adjacency.resize(g.nodes.size());
    for (const auto& [a, b] : graph.edges) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
    }
    sort_unique(g.adjacency);
    return g;
}

std::vector<std::int64_t> triangle_counts(const SimpleGraph& graph) {
    const auto n = graph.node_count();
    std::vector<std::int64_t> triangles(n, 0);
    std::vector<char> mark(n, 0);
    for (std::uint32_t u = 0; u < n; ++u) {
        for (auto v : graph.adjacency[u]) mark[v] = 1;
        for (auto v : graph.adjacency[u]) {
            if (v <= u) continue;
            for (auto w : graph.adjacency[v]) {
                if (w <= v || !mark[w]) continue;
                ++triangles[u];
                ++triangles[v];
                ++triangles[w];
            }
        }
        for (auto v : graph.adjacency[u]) mark[v] = 0;
    }
    return triangles;
}

RewireStats rewire_directed(DirectedGraph& graph, std::uint64_t target_swaps, std::uint64_t max_attempts,
                            std::mt19937_64& rng) {
    RewireStats stats;
    auto& edges = graph.edges;
    if (edges.size() < 2) {
        stats.reached_target = target_swaps == 0;
        return stats;
    }
    std::unordered_set<std::uint64_t> present;
    present.reserve(edges.size() * 2);
    for (const auto& [s, t] : edges) present.insert(pair_key(s, t));
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    while (stats.swaps < target_swaps && stats.attempts < max_attempts) {
        ++stats.attempts;
        const auto i = pick(rng);
        const auto j = pick(rng);
        if (i == j) continue;
        const auto [a, b] = edges[i];
        const auto [c, d] = edges[j];
        if (a == d || c == b || b == d) continue;
        if (present.contains(pair_key(a, d)) || present.contains(pair_key(c, b))) continue;
        present.erase(pair_key(a, b));
        present.erase(pair_key(c, d));
        present.insert(pair_key(a, d));
        present.insert(pair_key(c, b));
        edges[i] = {a, d};
        edges[j] = {c, b};
        ++stats.swaps;
    }
    stats.reached_target = stats.swaps >= target_swaps;
    return stats;
}

}  // namespace wot
