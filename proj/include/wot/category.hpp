#pragma once

#include <array>
#include <map>
#include <string_view>
#include <vector>

#include "wot/metrics.hpp"

namespace wot {

enum class CategoryLabel { trustworthy, untrusted, controversial, uncategorized };

std::string_view to_string(CategoryLabel label);

inline constexpr std::array<CategoryLabel, 3> kCategories = {CategoryLabel::trustworthy, CategoryLabel::untrusted,
                                                             CategoryLabel::controversial};

/// Bounds on the negative share r = rho_minus / (rho_plus + rho_minus).
struct CategoryThresholds {
    double low = 0.25;
    double high = 0.75;

    /// Throws std::invalid_argument unless 0 < low < 0.5 < high < 1.
    void validate() const;
};

/// Negative share of a user's total reputation; NaN when both parts are zero.
double negative_share(const NodeMetrics& m);

CategoryLabel categorize(const NodeMetrics& m, const CategoryThresholds& thresholds = {});

using CategoryMap = std::map<UserId, CategoryLabel>;

CategoryMap categorize(const MetricsMap& metrics, const CategoryThresholds& thresholds = {});

/// Five-number summary plus the raw values.
struct Quantiles {
    std::size_t count = 0;
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
    std::vector<double> values;  // ascending
};

/// Linear-interpolation quantiles. An empty input gives count 0 and zeros.
Quantiles quantiles(std::vector<double> values);

struct CategorySummary {
    CategoryLabel label = CategoryLabel::uncategorized;
    std::size_t users = 0;
    Quantiles rho;
    Quantiles k_out_plus;
    Quantiles k_out_minus;
    Quantiles k_out_total;
};

/// One summary per labeled category, in kCategories order.
std::vector<CategorySummary> category_summary(const MetricsMap& metrics, const CategoryMap& labels);

struct ScatterPoint {
    UserId user = 0;
    std::int64_t k_in = 0;  // k_in_plus + k_in_minus
    std::int64_t rho = 0;
    CategoryLabel label = CategoryLabel::uncategorized;
};

/// Limit growth lines rho = slope * k_in.
inline constexpr std::array<int, 3> kReferenceSlopes = {10, 1, -10};

std::vector<ScatterPoint> reputation_vs_indegree_scatter(const MetricsMap& metrics, const CategoryMap& labels);

}  // namespace wot
