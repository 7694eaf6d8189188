#include "wot/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wot {

double Distribution::pmf_at(std::int64_t value) const {
    auto it = std::lower_bound(support.begin(), support.end(), value);
    if (it == support.end() || *it != value) return 0.0;
    return pmf[static_cast<std::size_t>(it - support.begin())];
}

std::int64_t Distribution::mode() const {
    if (support.empty()) throw std::logic_error("mode of an empty distribution");
    auto best = std::max_element(pmf.begin(), pmf.end());
    return support[static_cast<std::size_t>(best - pmf.begin())];
}

Distribution make_distribution(std::span<const std::int64_t> values) {
    if (values.empty()) throw std::invalid_argument("distribution of an empty sample");
    std::vector<std::int64_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    Distribution d;
    d.n_samples = sorted.size();
    const double n = static_cast<double>(sorted.size());
    std::vector<std::size_t> counts;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        d.support.push_back(sorted[i]);
        counts.push_back(j - i);
        i = j;
    }
    std::size_t at_least = sorted.size();
    for (std::size_t c : counts) {
        d.pmf.push_back(static_cast<double>(c) / n);
        d.ccdf.push_back(static_cast<double>(at_least) / n);
        at_least -= c;
    }
    return d;
}

std::vector<LogBin> log_bins(std::span<const std::int64_t> values, int bins_per_decade) {
    if (bins_per_decade < 1) throw std::invalid_argument("bins_per_decade must be positive");
    std::vector<std::int64_t> positive;
    for (auto v : values) {
        if (v > 0) positive.push_back(v);
    }
    std::vector<LogBin> bins;
    if (positive.empty()) return bins;
    std::sort(positive.begin(), positive.end());
    const double step = 1.0 / bins_per_decade;
    const double n = static_cast<double>(positive.size());
    const double top = std::log10(static_cast<double>(positive.back()));
    std::size_t cursor = 0;
    for (int b = 0; b * step <= top + 1e-12; ++b) {
        LogBin bin;
        bin.lower = std::pow(10.0, b * step);
        bin.upper = std::pow(10.0, (b + 1) * step);
        bin.center = std::sqrt(bin.lower * bin.upper);
        bin.ccdf = static_cast<double>(positive.size() - cursor) / n;
        while (cursor < positive.size() && static_cast<double>(positive[cursor]) < bin.upper) {
            ++bin.count;
            ++cursor;
        }
        bin.density = static_cast<double>(bin.count) / (n * (bin.upper - bin.lower));
        bins.push_back(bin);
    }
    return bins;
}

TailFit fit_loglog_ccdf(const Distribution& dist, double x_min, double x_max, double min_ccdf) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < dist.support.size(); ++i) {
        const double x = static_cast<double>(dist.support[i]);
        if (x < x_min || x > x_max || x <= 0 || dist.ccdf[i] <= min_ccdf) continue;
        xs.push_back(std::log10(x));
        ys.push_back(std::log10(dist.ccdf[i]));
    }
    TailFit fit;
    fit.points = xs.size();
    if (xs.size() < 3) return fit;
    fit.decades = xs.back() - xs.front();
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx <= 0) return fit;
    fit.slope = sxy / sxx;
    fit.r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return fit;
}

bool is_heavy_tailed(const Distribution& dist, double min_decades, double x_min, double min_r_squared) {
    // Skip the sparsest tail points: the last few observations dominate log-ccdf noise.
    const double floor = dist.n_samples > 0 ? 10.0 / static_cast<double>(dist.n_samples) : 0.0;
    auto fit = fit_loglog_ccdf(dist, x_min, static_cast<double>(dist.support.empty() ? 0 : dist.support.back()), floor);
    return fit.decades >= min_decades && fit.r_squared >= min_r_squared && fit.slope < 0;
}

}  // namespace wot
