#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wot/distribution.hpp"
#include "wot/graph.hpp"
#include "wot/layers.hpp"
#include "wot/metrics.hpp"

namespace wot {

/// Edge weight distribution of a layer. Throws std::invalid_argument if empty.
Distribution weight_distribution(const LayerView& layer);

struct ReputationDistributions {
    Distribution positive;  // over users with rho_plus > 0; empty if none
    Distribution negative;  // over users with rho_minus > 0; empty if none
    Distribution global;    // over every user
};

ReputationDistributions reputation_distributions(const MetricsMap& metrics);

/// One bucket of a per-degree statistic.
struct SpectrumRow {
    std::int64_t degree = 0;
    double mean = 0;
    double std = 0;  // population
    std::size_t n_nodes = 0;
};

using DegreeSpectrum = std::vector<SpectrumRow>;

/// Groups `values` by the matching entry of `degrees`; rows ascend by degree.
DegreeSpectrum bucket_by_degree(std::span<const std::int64_t> degrees, std::span<const double> values);

struct LogBinnedRow {
    double lower = 0;
    double upper = 0;
    double center = 0;
    double mean = 0;  // node-weighted mean of the member rows
    std::size_t n_nodes = 0;
};

/// Logarithmic regrouping of a spectrum; rows with degree < 1 are dropped.
std::vector<LogBinnedRow> log_bin_spectrum(const DegreeSpectrum& spectrum, int bins_per_decade = 5);

struct ClusteringOptions {
    /// Nodes of degree < 2 count as zero clustering when true, and are left
    /// out of averages when false.
    bool include_low_degree = true;
};

/// Local clustering coefficient of every node of the graph.
std::vector<double> local_clustering(const SimpleGraph& graph);

/// Clustering averaged per total degree of the undirected, unweighted projection.
DegreeSpectrum clustering_spectrum(const LayerView& layer, const ClusteringOptions& options = {});

/// Network-wide average of local clustering.
double mean_clustering(const SimpleGraph& graph, const ClusteringOptions& options = {});
double mean_clustering(const LayerView& layer, const ClusteringOptions& options = {},
                       std::span<const UserId> extra_nodes = {});

struct NullSpectrumRow {
    std::int64_t degree = 0;
    double null_mean = 0;     // mean over samples of the bucket mean
    double null_std = 0;      // spread over samples of the bucket mean
    std::size_t samples = 0;  // samples in which the bucket is occupied
};

struct ConfigurationNull {
    std::vector<NullSpectrumRow> rows;
    std::vector<double> sample_mean_clustering;
    double mean_clustering = 0;  // mean over samples
    double std_clustering = 0;   // population std over samples
    std::uint64_t swaps_per_edge = 10;
    std::vector<std::uint64_t> swaps_done;
    bool degrees_preserved = true;
    std::vector<std::string> warnings;
};

struct NullModelOptions {
    std::uint64_t swaps_per_edge = 10;
    std::uint64_t attempts_per_edge = 100;
    ClusteringOptions clustering;
    /// 0 selects the hardware concurrency. Results do not depend on it.
    unsigned threads = 0;
};

/// Clustering spectrum of degree-preserving directed rewirings of the layer.
/// Sample i draws from its own generator seeded with (seed, i).
ConfigurationNull configuration_null(const LayerView& layer, std::size_t n_samples, std::uint64_t seed,
                                     const NullModelOptions& options = {});

/// Mean neighbour degree averaged per node degree, on the undirected projection.
DegreeSpectrum avg_neighbor_degree_spectrum(const LayerView& layer);
DegreeSpectrum avg_neighbor_degree_spectrum(const SimpleGraph& graph);

/// Spearman rank correlation with average ranks for ties. NaN when undefined.
double spearman(std::span<const double> x, std::span<const double> y);

/// Tie-aware Kendall tau-b of paired observations in O(n log n).
/// NaN when either side is constant. Throws on length mismatch.
double kendall_tau_b(std::span<const double> a, std::span<const double> b);

/// A ranking of users together with the values it was derived from.
struct Ranking {
    std::vector<UserId> order;   // descending value, ascending id on ties
    std::vector<double> values;  // values[i] belongs to order[i]
};

/// Tau-b between two rankings of the same user set, computed on the
/// underlying values so equal values count as ties. Throws
/// std::invalid_argument when the user sets differ.
double kendall_tau(const Ranking& a, const Ranking& b);

enum class RankKey { k_in_plus, k_in_minus, k_out_plus, k_out_minus, rho };

inline constexpr std::size_t kRankKeyCount = 5;
inline constexpr RankKey kRankKeys[kRankKeyCount] = {RankKey::k_in_plus, RankKey::k_in_minus, RankKey::k_out_plus,
                                                     RankKey::k_out_minus, RankKey::rho};

std::string_view to_string(RankKey key);
std::int64_t value_of(const NodeMetrics& m, RankKey key);

Ranking rank_users(const MetricsMap& metrics, RankKey key);

struct RankRow {
    std::size_t rank = 0;  // 1-based position in the k_in_plus ranking
    UserId user = 0;
    NodeMetrics metrics;
};

struct RankingReport {
    std::vector<Ranking> rankings;                    // indexed like kRankKeys
    std::vector<std::vector<double>> tau;             // 5x5, symmetric
    std::vector<RankRow> by_in_plus;
};

/// Throws std::invalid_argument on an empty map.
RankingReport ranking_report(const MetricsMap& metrics);

/// Mean and spread of rho for every occupied in-degree level of one layer.
DegreeSpectrum reputation_by_indegree(const MetricsMap& metrics, Layer layer);

}  // namespace wot
