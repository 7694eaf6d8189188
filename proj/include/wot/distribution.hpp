#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wot {

/// Empirical distribution of integer observations.
struct Distribution {
    std::vector<std::int64_t> support;  // sorted, distinct
    std::vector<double> pmf;
    std::vector<double> ccdf;           // P(X >= support[i])
    std::size_t n_samples = 0;

    double pmf_at(std::int64_t value) const;
    /// Support value with the largest mass; smallest such value on ties.
    std::int64_t mode() const;
};

/// Throws std::invalid_argument on empty input.
Distribution make_distribution(std::span<const std::int64_t> values);

struct LogBin {
    double lower = 0;    // inclusive
    double upper = 0;    // exclusive
    double center = 0;   // geometric center
    std::size_t count = 0;
    double density = 0;  // count / (n * width)
    double ccdf = 0;     // P(X >= lower)
};

/// Logarithmic histogram of the strictly positive values; others are ignored.
std::vector<LogBin> log_bins(std::span<const std::int64_t> values, int bins_per_decade = 5);

struct TailFit {
    double decades = 0;     // log10 span of the fitted window
    double slope = 0;       // d log ccdf / d log x
    double r_squared = 0;
    std::size_t points = 0;
};

/// Least-squares line through (log10 x, log10 ccdf) for support values in
/// [x_min, x_max] with ccdf above `min_ccdf`.
TailFit fit_loglog_ccdf(const Distribution& dist, double x_min, double x_max, double min_ccdf = 0.0);

/// Qualitative heavy-tail check: the CCDF is close to a straight line on
/// log-log axes over at least `min_decades` decades starting at x_min.
bool is_heavy_tailed(const Distribution& dist, double min_decades, double x_min = 1.0, double min_r_squared = 0.9);

}  // namespace wot
