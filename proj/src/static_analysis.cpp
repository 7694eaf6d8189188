#include "wot/static_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace wot {

Distribution weight_distribution(const LayerView& layer) {
    if (layer.empty()) throw std::invalid_argument("weight distribution of an empty layer");
    std::vector<std::int64_t> weights;
    weights.reserve(layer.edges.size());
    for (const auto& e : layer.edges) weights.push_back(e.weight);
    return make_distribution(weights);
}

ReputationDistributions reputation_distributions(const MetricsMap& metrics) {
    std::vector<std::int64_t> plus, minus, global;
    for (const auto& [user, m] : metrics) {
        if (m.rho_plus > 0) plus.push_back(m.rho_plus);
        if (m.rho_minus > 0) minus.push_back(m.rho_minus);
        global.push_back(m.rho);
    }
    ReputationDistributions out;
    if (!plus.empty()) out.positive = make_distribution(plus);
    if (!minus.empty()) out.negative = make_distribution(minus);
    if (!global.empty()) out.global = make_distribution(global);
    return out;
}

DegreeSpectrum bucket_by_degree(std::span<const std::int64_t> degrees, std::span<const double> values) {
    if (degrees.size() != values.size()) throw std::invalid_argument("bucket_by_degree: length mismatch");
    struct Acc {
        double sum = 0, sum_sq = 0;
        std::size_t n = 0;
    };
    std::map<std::int64_t, Acc> buckets;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        auto& acc = buckets[degrees[i]];
        acc.sum += values[i];
        acc.sum_sq += values[i] * values[i];
        ++acc.n;
    }
    DegreeSpectrum out;
    out.reserve(buckets.size());
    for (const auto& [degree, acc] : buckets) {
        const double n = static_cast<double>(acc.n);
        const double mean = acc.sum / n;
        const double var = std::max(0.0, acc.sum_sq / n - mean * mean);
        out.push_back({degree, mean, std::sqrt(var), acc.n});
    }
    return out;
}

std::vector<LogBinnedRow> log_bin_spectrum(const DegreeSpectrum& spectrum, int bins_per_decade) {
    if (bins_per_decade < 1) throw std::invalid_argument("bins_per_decade must be positive");
    std::map<int, LogBinnedRow> bins;
    std::map<int, double> weighted;
    for (const auto& row : spectrum) {
        if (row.degree < 1) continue;
        const int b = static_cast<int>(std::floor(std::log10(static_cast<double>(row.degree)) * bins_per_decade + 1e-9));
        auto& bin = bins[b];
        bin.lower = std::pow(10.0, static_cast<double>(b) / bins_per_decade);
        bin.upper = std::pow(10.0, static_cast<double>(b + 1) / bins_per_decade);
        bin.center = std::sqrt(bin.lower * bin.upper);
        bin.n_nodes += row.n_nodes;
        weighted[b] += row.mean * static_cast<double>(row.n_nodes);
    }
    std::vector<LogBinnedRow> out;
    for (auto& [b, bin] : bins) {
        bin.mean = weighted[b] / static_cast<double>(bin.n_nodes);
        out.push_back(bin);
    }
    return out;
}

std::vector<double> local_clustering(const SimpleGraph& graph) {
    const auto triangles = triangle_counts(graph);
    std::vector<double> c(graph.node_count(), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double k = static_cast<double>(graph.degree(i));
        if (k >= 2) c[i] = static_cast<double>(triangles[i]) / (k * (k - 1) / 2.0);
    }
    return c;
}

namespace {

DegreeSpectrum clustering_spectrum(const SimpleGraph& graph, const ClusteringOptions& options) {
    const auto c = local_clustering(graph);
    std::vector<std::int64_t> degrees;
    std::vector<double> values;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!options.include_low_degree && graph.degree(i) < 2) continue;
        degrees.push_back(static_cast<std::int64_t>(graph.degree(i)));
        values.push_back(c[i]);
    }
    return bucket_by_degree(degrees, values);
}

double population_std(std::span<const double> xs, double mean) {
    if (xs.empty()) return 0.0;
    double acc = 0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(xs.size()));
}

double mean_of(std::span<const double> xs) {
    if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

}  // namespace

DegreeSpectrum clustering_spectrum(const LayerView& layer, const ClusteringOptions& options) {
    return clustering_spectrum(undirected_projection(layer), options);
}

double mean_clustering(const SimpleGraph& graph, const ClusteringOptions& options) {
    const auto c = local_clustering(graph);
    double sum = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!options.include_low_degree && graph.degree(i) < 2) continue;
        sum += c[i];
        ++n;
    }
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

double mean_clustering(const LayerView& layer, const ClusteringOptions& options, std::span<const UserId> extra_nodes) {
    return mean_clustering(undirected_projection(layer, extra_nodes), options);
}

ConfigurationNull configuration_null(const LayerView& layer, std::size_t n_samples, std::uint64_t seed,
                                     const NullModelOptions& options) {
    if (n_samples < 1) throw std::invalid_argument("configuration_null: n_samples must be at least 1");
    const DirectedGraph base = directed_projection(layer);
    const auto base_in = base.in_degrees();
    const auto base_out = base.out_degrees();
    const std::uint64_t m = base.edges.size();

    struct Sample {
        DegreeSpectrum spectrum;
        double mean = 0;
        RewireStats stats;
        bool preserved = true;
    };
    std::vector<Sample> samples(n_samples);
    auto run = [&](std::size_t s) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
        std::mt19937_64 rng(seq);
        DirectedGraph g = base;
        auto& out = samples[s];
        out.stats = rewire_directed(g, options.swaps_per_edge * m, std::max<std::uint64_t>(options.attempts_per_edge * m, 1000), rng);
        out.preserved = g.in_degrees() == base_in && g.out_degrees() == base_out;
        const auto und = undirected_projection(g);
        out.spectrum = clustering_spectrum(und, options.clustering);
        out.mean = mean_clustering(und, options.clustering);
    };

    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_samples));
    if (threads <= 1) {
        for (std::size_t s = 0; s < n_samples; ++s) run(s);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t s = w; s < n_samples; s += threads) run(s);
            });
        }
    }

    ConfigurationNull result;
    result.swaps_per_edge = options.swaps_per_edge;
    std::map<std::int64_t, std::vector<double>> per_degree;
    for (std::size_t s = 0; s < n_samples; ++s) {
        const auto& sample = samples[s];
        result.sample_mean_clustering.push_back(sample.mean);
        result.swaps_done.push_back(sample.stats.swaps);
        result.degrees_preserved = result.degrees_preserved && sample.preserved;
        if (!sample.stats.reached_target) {
            result.warnings.push_back("sample " + std::to_string(s) + ": only " + std::to_string(sample.stats.swaps) +
                                      " of " + std::to_string(options.swaps_per_edge * m) +
                                      " swaps accepted; degree sequence resists rewiring");
        }
        for (const auto& row : sample.spectrum) per_degree[row.degree].push_back(row.mean);
    }
    for (const auto& [degree, means] : per_degree) {
        const double mu = mean_of(means);
        result.rows.push_back({degree, mu, population_std(means, mu), means.size()});
    }
    result.mean_clustering = mean_of(result.sample_mean_clustering);
    result.std_clustering = population_std(result.sample_mean_clustering, result.mean_clustering);
    return result;
}

DegreeSpectrum avg_neighbor_degree_spectrum(const SimpleGraph& graph) {
    std::vector<std::int64_t> degrees;
    std::vector<double> values;
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        const auto k = graph.degree(i);
        if (k == 0) continue;
        double sum = 0;
        for (auto j : graph.adjacency[i]) sum += static_cast<double>(graph.degree(j));
        degrees.push_back(static_cast<std::int64_t>(k));
        values.push_back(sum / static_cast<double>(k));
    }
    return bucket_by_degree(degrees, values);
}

DegreeSpectrum avg_neighbor_degree_spectrum(const LayerView& layer) {
    return avg_neighbor_degree_spectrum(undirected_projection(layer));
}

namespace {

std::vector<double> average_ranks(std::span<const double> x) {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(x.size());
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j < idx.size() && x[idx[j]] == x[idx[i]]) ++j;
        const double r = (static_cast<double>(i) + static_cast<double>(j - 1)) / 2.0 + 1.0;
        for (std::size_t t = i; t < j; ++t) ranks[idx[t]] = r;
        i = j;
    }
    return ranks;
}

// Number of tied pairs among runs of equal values in an already-sorted sequence.
template <typename Same>
std::int64_t tied_pairs(std::size_t n, Same same) {
    std::int64_t total = 0;
    std::int64_t run = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (same(i - 1, i)) {
            ++run;
        } else {
            total += run * (run - 1) / 2;
            run = 1;
        }
    }
    return total + run * (run - 1) / 2;
}

// Sorts `order` by b[order[i]] with a stable merge sort, returning the number of inversions.
std::int64_t merge_count(std::vector<std::size_t>& order, std::span<const double> b) {
    const std::size_t n = order.size();
    std::vector<std::size_t> buffer(n);
    std::int64_t swaps = 0;
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo < n; lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, n);
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (b[order[j]] < b[order[i]]) {
                    swaps += static_cast<std::int64_t>(mid - i);
                    buffer[k++] = order[j++];
                } else {
                    buffer[k++] = order[i++];
                }
            }
            while (i < mid) buffer[k++] = order[i++];
            while (j < hi) buffer[k++] = order[j++];
        }
        order.swap(buffer);
    }
    return swaps;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
    const auto nan = std::numeric_limits<double>::quiet_NaN();
    if (x.size() < 2) return nan;
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    const double mx = mean_of(rx), my = mean_of(ry);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0 || syy == 0) return nan;
    return sxy / std::sqrt(sxx * syy);
}

double kendall_tau_b(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("kendall_tau_b: length mismatch");
    const auto nan = std::numeric_limits<double>::quiet_NaN();
    const std::size_t n = a.size();
    if (n < 2) return nan;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a[i] != a[j] ? a[i] < a[j] : b[i] < b[j];
    });
    const std::int64_t ties_a = tied_pairs(n, [&](std::size_t i, std::size_t j) { return a[order[i]] == a[order[j]]; });
    const std::int64_t ties_ab = tied_pairs(n, [&](std::size_t i, std::size_t j) {
        return a[order[i]] == a[order[j]] && b[order[i]] == b[order[j]];
    });
    const std::int64_t discordant = merge_count(order, b);
    const std::int64_t ties_b = tied_pairs(n, [&](std::size_t i, std::size_t j) { return b[order[i]] == b[order[j]]; });
    const std::int64_t total = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
    const double denom = std::sqrt(static_cast<double>(total - ties_a) * static_cast<double>(total - ties_b));
    if (denom == 0) return nan;
    const double s = static_cast<double>(total - ties_a - ties_b + ties_ab - 2 * discordant);
    return std::clamp(s / denom, -1.0, 1.0);
}

double kendall_tau(const Ranking& a, const Ranking& b) {
    if (a.order.size() != b.order.size()) throw std::invalid_argument("kendall_tau: rankings cover different user sets");
    std::map<UserId, double> lookup;
    for (std::size_t i = 0; i < b.order.size(); ++i) lookup.emplace(b.order[i], b.values[i]);
    std::vector<double> xs, ys;
    xs.reserve(a.order.size());
    ys.reserve(a.order.size());
    for (std::size_t i = 0; i < a.order.size(); ++i) {
        auto it = lookup.find(a.order[i]);
        if (it == lookup.end()) throw std::invalid_argument("kendall_tau: rankings cover different user sets");
        xs.push_back(a.values[i]);
        ys.push_back(it->second);
    }
    return kendall_tau_b(xs, ys);
}

std::string_view to_string(RankKey key) {
    switch (key) {
        case RankKey::k_in_plus: return "k_in_plus";
        case RankKey::k_in_minus: return "k_in_minus";
        case RankKey::k_out_plus: return "k_out_plus";
        case RankKey::k_out_minus: return "k_out_minus";
        case RankKey::rho: return "rho";
    }
    return "?";
}

std::int64_t value_of(const NodeMetrics& m, RankKey key) {
    switch (key) {
        case RankKey::k_in_plus: return m.k_in_plus;
        case RankKey::k_in_minus: return m.k_in_minus;
        case RankKey::k_out_plus: return m.k_out_plus;
        case RankKey::k_out_minus: return m.k_out_minus;
        case RankKey::rho: return m.rho;
    }
    return 0;
}

Ranking rank_users(const MetricsMap& metrics, RankKey key) {
    std::vector<std::pair<std::int64_t, UserId>> entries;
    entries.reserve(metrics.size());
    for (const auto& [user, m] : metrics) entries.emplace_back(value_of(m, key), user);
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    Ranking r;
    for (const auto& [value, user] : entries) {
        r.order.push_back(user);
        r.values.push_back(static_cast<double>(value));
    }
    return r;
}

RankingReport ranking_report(const MetricsMap& metrics) {
    if (metrics.empty()) throw std::invalid_argument("ranking_report: no users");
    RankingReport report;
    for (auto key : kRankKeys) report.rankings.push_back(rank_users(metrics, key));
    report.tau.assign(kRankKeyCount, std::vector<double>(kRankKeyCount, 1.0));
    // All rankings share the map's user order, so values can be paired directly.
    std::vector<std::vector<double>> columns(kRankKeyCount);
    for (std::size_t k = 0; k < kRankKeyCount; ++k) {
        for (const auto& [user, m] : metrics) columns[k].push_back(static_cast<double>(value_of(m, kRankKeys[k])));
    }
    for (std::size_t i = 0; i < kRankKeyCount; ++i) {
        for (std::size_t j = i + 1; j < kRankKeyCount; ++j) {
            report.tau[i][j] = report.tau[j][i] = kendall_tau_b(columns[i], columns[j]);
        }
    }
    const auto& by_in = report.rankings.front();
    for (std::size_t i = 0; i < by_in.order.size(); ++i) {
        report.by_in_plus.push_back({i + 1, by_in.order[i], metrics.at(by_in.order[i])});
    }
    return report;
}

DegreeSpectrum reputation_by_indegree(const MetricsMap& metrics, Layer layer) {
    std::vector<std::int64_t> degrees;
    std::vector<double> values;
    for (const auto& [user, m] : metrics) {
        degrees.push_back(layer == Layer::rewarding ? m.k_in_plus : m.k_in_minus);
        values.push_back(static_cast<double>(m.rho));
    }
    return bucket_by_degree(degrees, values);
}

}  // namespace wot
