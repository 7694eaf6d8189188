#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "wot/category.hpp"
#include "wot/dynamics.hpp"
#include "wot/static_analysis.hpp"
#include "wot/temporal.hpp"

namespace wot::csv {

/// Shortest round-trippable rendering; NaN and missing values render empty.
std::string number(double value);

void write_events(std::ostream& os, const EventLog& log);

void write_distribution(std::ostream& os, const Distribution& dist, std::string_view value_column);
void write_log_bins(std::ostream& os, std::span<const LogBin> bins, std::string_view value_column);

/// `degree,mean_clustering,std,null_mean,null_std,n_nodes`; null columns are
/// empty for degrees the null model never produced.
void write_clustering_spectrum(std::ostream& os, const DegreeSpectrum& empirical, const ConfigurationNull* null);
void write_spectrum(std::ostream& os, const DegreeSpectrum& spectrum, std::string_view degree_column,
                    std::string_view mean_column, std::string_view std_column);
void write_log_binned_spectrum(std::ostream& os, std::span<const LogBinnedRow> rows, std::string_view mean_column);

void write_tau_matrix(std::ostream& os, const RankingReport& report);
void write_rank_rows(std::ostream& os, const RankingReport& report);

void write_categories(std::ostream& os, const MetricsMap& metrics, const CategoryMap& labels);
void write_category_quantiles(std::ostream& os, std::span<const CategorySummary> summaries);
void write_scatter(std::ostream& os, std::span<const ScatterPoint> points);
void write_reference_lines(std::ostream& os);

void write_daily_series(std::ostream& os, std::span<const DailyCount> rows, std::span<const AnnotationWindow> windows);
void write_active_days(std::ostream& os, const ActiveDays& days);
void write_burstiness(std::ostream& os, std::span<const YearlyBurstiness> rows);
void write_profile(std::ostream& os, const ActivityProfile& profile, std::string_view bucket_column);

void write_gini_series(std::ostream& os, std::span<const GiniRow> rows);
void write_stability_series(std::ostream& os, std::span<const StabilityRow> rows);
void write_trajectories(std::ostream& os, std::span<const Trajectory> trajectories);

}  // namespace wot::csv
