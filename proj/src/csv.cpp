#include "wot/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

namespace wot::csv {

std::string number(double value) {
    if (std::isnan(value)) return {};
    char buf[32];
    for (int precision = 6; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value) break;
    }
    return buf;
}

namespace {

std::string optional_number(const std::optional<double>& value) { return value ? number(*value) : std::string{}; }

}  // namespace

void write_events(std::ostream& os, const EventLog& log) {
    os << "rater,ratee,score,timestamp\n";
    for (const auto& e : log.events()) os << e.rater << ',' << e.ratee << ',' << e.score << ',' << e.time << '\n';
}

void write_distribution(std::ostream& os, const Distribution& dist, std::string_view value_column) {
    os << value_column << ",pmf,ccdf\n";
    for (std::size_t i = 0; i < dist.support.size(); ++i) {
        os << dist.support[i] << ',' << number(dist.pmf[i]) << ',' << number(dist.ccdf[i]) << '\n';
    }
}

void write_log_bins(std::ostream& os, std::span<const LogBin> bins, std::string_view value_column) {
    os << value_column << "_lower," << value_column << "_upper," << value_column << "_center,count,density,ccdf\n";
    for (const auto& b : bins) {
        os << number(b.lower) << ',' << number(b.upper) << ',' << number(b.center) << ',' << b.count << ','
           << number(b.density) << ',' << number(b.ccdf) << '\n';
    }
}

void write_clustering_spectrum(std::ostream& os, const DegreeSpectrum& empirical, const ConfigurationNull* null) {
    std::map<std::int64_t, const NullSpectrumRow*> null_rows;
    if (null != nullptr) {
        for (const auto& row : null->rows) null_rows.emplace(row.degree, &row);
    }
    os << "degree,mean_clustering,std,null_mean,null_std,n_nodes\n";
    for (const auto& row : empirical) {
        os << row.degree << ',' << number(row.mean) << ',' << number(row.std) << ',';
        if (auto it = null_rows.find(row.degree); it != null_rows.end()) {
            os << number(it->second->null_mean) << ',' << number(it->second->null_std);
        } else {
            os << ',';
        }
        os << ',' << row.n_nodes << '\n';
    }
}

void write_spectrum(std::ostream& os, const DegreeSpectrum& spectrum, std::string_view degree_column,
                    std::string_view mean_column, std::string_view std_column) {
    os << degree_column << ',' << mean_column << ',' << std_column << ",n_nodes\n";
    for (const auto& row : spectrum) {
        os << row.degree << ',' << number(row.mean) << ',' << number(row.std) << ',' << row.n_nodes << '\n';
    }
}

void write_log_binned_spectrum(std::ostream& os, std::span<const LogBinnedRow> rows, std::string_view mean_column) {
    os << "degree_lower,degree_upper,degree_center," << mean_column << ",n_nodes\n";
    for (const auto& r : rows) {
        os << number(r.lower) << ',' << number(r.upper) << ',' << number(r.center) << ',' << number(r.mean) << ','
           << r.n_nodes << '\n';
    }
}

void write_tau_matrix(std::ostream& os, const RankingReport& report) {
    os << "key";
    for (auto key : kRankKeys) os << ',' << to_string(key);
    os << '\n';
    for (std::size_t i = 0; i < kRankKeyCount; ++i) {
        os << to_string(kRankKeys[i]);
        for (std::size_t j = 0; j < kRankKeyCount; ++j) os << ',' << number(report.tau[i][j]);
        os << '\n';
    }
}

void write_rank_rows(std::ostream& os, const RankingReport& report) {
    os << "rank,user,k_in_plus,k_in_minus,k_out_plus,k_out_minus,rho\n";
    for (const auto& r : report.by_in_plus) {
        const auto& m = r.metrics;
        os << r.rank << ',' << r.user << ',' << m.k_in_plus << ',' << m.k_in_minus << ',' << m.k_out_plus << ','
           << m.k_out_minus << ',' << m.rho << '\n';
    }
}

void write_categories(std::ostream& os, const MetricsMap& metrics, const CategoryMap& labels) {
    os << "user,rho_plus,rho_minus,rho,r,label\n";
    for (const auto& [user, m] : metrics) {
        auto it = labels.find(user);
        os << user << ',' << m.rho_plus << ',' << m.rho_minus << ',' << m.rho << ',' << number(negative_share(m)) << ','
           << to_string(it == labels.end() ? CategoryLabel::uncategorized : it->second) << '\n';
    }
}

void write_category_quantiles(std::ostream& os, std::span<const CategorySummary> summaries) {
    os << "category,quantity,count,min,q1,median,q3,max\n";
    for (const auto& s : summaries) {
        const std::pair<std::string_view, const Quantiles*> parts[] = {
            {"rho", &s.rho}, {"k_out_plus", &s.k_out_plus}, {"k_out_minus", &s.k_out_minus}, {"k_out_total", &s.k_out_total}};
        for (const auto& [name, q] : parts) {
            os << to_string(s.label) << ',' << name << ',' << q->count << ',' << number(q->min) << ',' << number(q->q1)
               << ',' << number(q->median) << ',' << number(q->q3) << ',' << number(q->max) << '\n';
        }
    }
}

void write_scatter(std::ostream& os, std::span<const ScatterPoint> points) {
    os << "user,k_in,rho,label\n";
    for (const auto& p : points) os << p.user << ',' << p.k_in << ',' << p.rho << ',' << to_string(p.label) << '\n';
}

void write_reference_lines(std::ostream& os) {
    os << "slope,description\n";
    for (int slope : kReferenceSlopes) {
        os << slope << ",rho=" << slope << "*k_in\n";
    }
}

void write_daily_series(std::ostream& os, std::span<const DailyCount> rows, std::span<const AnnotationWindow> windows) {
    os << "date,count_plus,count_minus" << (windows.empty() ? "" : ",annotation") << '\n';
    for (const auto& r : rows) {
        os << r.day.iso() << ',' << r.count_plus << ',' << r.count_minus;
        if (!windows.empty()) os << ',' << annotation_for(r.day, windows);
        os << '\n';
    }
}

void write_active_days(std::ostream& os, const ActiveDays& days) {
    os << "layer,date\n";
    for (const auto& d : days.rewarding) os << "rewarding," << d.iso() << '\n';
    for (const auto& d : days.punitive) os << "punitive," << d.iso() << '\n';
}

void write_burstiness(std::ostream& os, std::span<const YearlyBurstiness> rows) {
    os << "year,layer,B,n_samples\n";
    for (const auto& r : rows) os << r.year << ',' << to_string(r.layer) << ',' << number(r.b) << ',' << r.n_samples << '\n';
}

void write_profile(std::ostream& os, const ActivityProfile& profile, std::string_view bucket_column) {
    os << bucket_column << ",frac_plus,frac_minus\n";
    for (std::size_t i = 0; i < profile.rewarding.size(); ++i) {
        os << i << ',' << number(profile.rewarding[i]) << ',' << number(profile.punitive[i]) << '\n';
    }
}

void write_gini_series(std::ostream& os, std::span<const GiniRow> rows) {
    os << "date,gini_plus,gini_minus\n";
    for (const auto& r : rows) {
        os << r.day.iso() << ',' << optional_number(r.gini_plus) << ',' << optional_number(r.gini_minus) << '\n';
    }
}

void write_stability_series(std::ostream& os, std::span<const StabilityRow> rows) {
    os << "date,J_plus,J_minus,J_global,set_J_plus,set_J_minus,set_J_global,truncated\n";
    for (const auto& r : rows) {
        os << r.day.iso() << ',' << number(r.j_plus) << ',' << number(r.j_minus) << ',' << number(r.j_global) << ','
           << number(r.set_plus) << ',' << number(r.set_minus) << ',' << number(r.set_global) << ','
           << (r.truncated ? 1 : 0) << '\n';
    }
}

void write_trajectories(std::ostream& os, std::span<const Trajectory> trajectories) {
    os << "user,seq_index,rho,category\n";
    for (const auto& t : trajectories) {
        for (std::size_t i = 0; i < t.values.size(); ++i) {
            os << t.user << ',' << i << ',' << t.values[i] << ',' << to_string(t.category) << '\n';
        }
    }
}

}  // namespace wot::csv
