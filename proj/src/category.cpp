#include "wot/category.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wot {

std::string_view to_string(CategoryLabel label) {
    switch (label) {
        case CategoryLabel::trustworthy: return "trustworthy";
        case CategoryLabel::untrusted: return "untrusted";
        case CategoryLabel::controversial: return "controversial";
        case CategoryLabel::uncategorized: return "uncategorized";
    }
    return "?";
}

void CategoryThresholds::validate() const {
    if (!(low > 0.0 && low < 0.5 && high > 0.5 && high < 1.0 && low < high)) {
        throw std::invalid_argument("category thresholds must satisfy 0 < low < 0.5 < high < 1");
    }
}

double negative_share(const NodeMetrics& m) {
    const auto total = m.rho_plus + m.rho_minus;
    if (total == 0) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(m.rho_minus) / static_cast<double>(total);
}

CategoryLabel categorize(const NodeMetrics& m, const CategoryThresholds& thresholds) {
    if (m.rho_plus + m.rho_minus == 0) return CategoryLabel::uncategorized;
    const double r = negative_share(m);
    if (r < thresholds.low) return CategoryLabel::trustworthy;
    if (r > thresholds.high) return CategoryLabel::untrusted;
    return CategoryLabel::controversial;
}

CategoryMap categorize(const MetricsMap& metrics, const CategoryThresholds& thresholds) {
    thresholds.validate();
    CategoryMap out;
    for (const auto& [user, m] : metrics) out.emplace(user, categorize(m, thresholds));
    return out;
}

Quantiles quantiles(std::vector<double> values) {
    Quantiles q;
    q.count = values.size();
    if (values.empty()) return q;
    std::sort(values.begin(), values.end());
    auto at = [&](double p) {
        const double pos = p * static_cast<double>(values.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const auto hi = std::min(lo + 1, values.size() - 1);
        return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
    };
    q.min = values.front();
    q.q1 = at(0.25);
    q.median = at(0.5);
    q.q3 = at(0.75);
    q.max = values.back();
    q.values = std::move(values);
    return q;
}

std::vector<CategorySummary> category_summary(const MetricsMap& metrics, const CategoryMap& labels) {
    std::vector<CategorySummary> out;
    for (auto label : kCategories) {
        std::vector<double> rho, plus, minus, total;
        for (const auto& [user, m] : metrics) {
            auto it = labels.find(user);
            if (it == labels.end() || it->second != label) continue;
            rho.push_back(static_cast<double>(m.rho));
            plus.push_back(static_cast<double>(m.k_out_plus));
            minus.push_back(static_cast<double>(m.k_out_minus));
            total.push_back(static_cast<double>(m.k_out()));
        }
        CategorySummary s;
        s.label = label;
        s.users = rho.size();
        s.rho = quantiles(std::move(rho));
        s.k_out_plus = quantiles(std::move(plus));
        s.k_out_minus = quantiles(std::move(minus));
        s.k_out_total = quantiles(std::move(total));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<ScatterPoint> reputation_vs_indegree_scatter(const MetricsMap& metrics, const CategoryMap& labels) {
    std::vector<ScatterPoint> out;
    out.reserve(metrics.size());
    for (const auto& [user, m] : metrics) {
        auto it = labels.find(user);
        out.push_back({user, m.k_in(), m.rho, it == labels.end() ? CategoryLabel::uncategorized : it->second});
    }
    return out;
}

}  // namespace wot
