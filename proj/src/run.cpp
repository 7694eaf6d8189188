#include "wot/run.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <sstream>

#include "wot/csv.hpp"
#include "wot/dynamics.hpp"
#include "wot/layers.hpp"
#include "wot/metrics.hpp"
#include "wot/static_analysis.hpp"
#include "wot/temporal.hpp"

namespace wot {

namespace {

template <typename Int>
Int parse_int_setting(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const long long parsed = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return static_cast<Int>(parsed);
    } catch (const std::exception&) {
        throw UsageError("invalid integer for " + key + ": '" + value + "'");
    }
}

double parse_double_setting(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw UsageError("invalid number for " + key + ": '" + value + "'");
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("input", input.string());
    out.emplace_back("out", output_dir.string());
    out.emplace_back("tz-shift", std::to_string(tz_shift_hours));
    out.emplace_back("thresholds", csv::number(thresholds.low) + "," + csv::number(thresholds.high));
    out.emplace_back("topk", std::to_string(top_k));
    out.emplace_back("null-samples", std::to_string(null_samples));
    out.emplace_back("seed", seed ? std::to_string(*seed) : "");
    out.emplace_back("mode", mode == IngestMode::strict ? "strict" : "lenient");
    out.emplace_back("annotations", annotations ? annotations->string() : "");
    return out;
}

void apply_setting(RunConfig& config, const std::string& raw_key, const std::string& raw_value) {
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    if (key == "input") {
        config.input = value;
    } else if (key == "out") {
        config.output_dir = value;
    } else if (key == "tz-shift") {
        config.tz_shift_hours = parse_int_setting<int>(key, value);
        try {
            check_tz_shift(config.tz_shift_hours);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else if (key == "thresholds") {
        const auto comma = value.find(',');
        if (comma == std::string::npos) throw UsageError("thresholds must be LOW,HIGH");
        CategoryThresholds t{parse_double_setting(key, trim(value.substr(0, comma))),
                             parse_double_setting(key, trim(value.substr(comma + 1)))};
        try {
            t.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        config.thresholds = t;
    } else if (key == "topk") {
        const auto k = parse_int_setting<long long>(key, value);
        if (k < 1) throw UsageError("topk must be at least 1");
        config.top_k = static_cast<std::size_t>(k);
    } else if (key == "null-samples") {
        const auto n = parse_int_setting<long long>(key, value);
        if (n < 1) throw UsageError("null-samples must be at least 1");
        config.null_samples = static_cast<std::size_t>(n);
    } else if (key == "seed") {
        const auto s = parse_int_setting<long long>(key, value);
        if (s < 0) throw UsageError("seed must be non-negative");
        config.seed = static_cast<std::uint64_t>(s);
    } else if (key == "mode") {
        if (value == "strict") {
            config.mode = IngestMode::strict;
        } else if (value == "lenient") {
            config.mode = IngestMode::lenient;
        } else {
            throw UsageError("mode must be strict or lenient");
        }
    } else if (key == "annotations") {
        if (value.empty()) {
            config.annotations.reset();
        } else {
            config.annotations = value;
        }
    } else if (key == "users") {
        config.synth.n_users = parse_int_setting<std::int64_t>(key, value);
    } else if (key == "events") {
        config.synth.n_events = parse_int_setting<std::int64_t>(key, value);
    } else if (key == "positive-fraction") {
        config.synth.positive_fraction = parse_double_setting(key, value);
    } else if (key == "score-model") {
        if (value == "uniform") {
            config.synth.scores = ScoreModel::uniform;
        } else if (value == "norm") {
            config.synth.scores = ScoreModel::norm;
        } else {
            throw UsageError("score-model must be uniform or norm");
        }
    } else if (key == "target-model") {
        if (value == "uniform") {
            config.synth.targets = TargetModel::uniform;
        } else if (value == "preferential") {
            config.synth.targets = TargetModel::preferential;
        } else {
            throw UsageError("target-model must be uniform or preferential");
        }
    } else {
        throw UsageError("unknown setting '" + key + "'");
    }
}

void apply_config_file(RunConfig& config, std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        apply_setting(config, body.substr(0, eq), body.substr(eq + 1));
    }
}

std::string file_checksum(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    char buffer[1 << 16];
    while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buffer[i]);
            hash *= 0x100000001b3ULL;
        }
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
    return hex;
}

namespace {

class OutputDir {
public:
    explicit OutputDir(std::filesystem::path root) : root_(std::move(root)) {
        std::filesystem::create_directories(root_);
    }

    void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
        const auto target = root_ / name;
        const auto temp = root_ / (name + ".tmp");
        {
            std::ofstream os(temp, std::ios::binary | std::ios::trunc);
            if (!os) throw std::runtime_error("cannot write " + temp.string());
            body(os);
            if (!os) throw std::runtime_error("write failed for " + temp.string());
        }
        std::filesystem::rename(temp, target);
        files_.push_back(name);
    }

    const std::vector<std::string>& files() const { return files_; }

private:
    std::filesystem::path root_;
    std::vector<std::string> files_;
};

struct Context {
    const RunConfig& config;
    std::ostream& out;
    std::ostream& err;
    OutputDir& dir;
    const EventLog& log;
    const IngestReport& report;
};

std::string pretty_count(std::size_t n) {
    std::string digits = std::to_string(n);
    for (int i = static_cast<int>(digits.size()) - 3; i > 0; i -= 3) digits.insert(static_cast<std::size_t>(i), ",");
    return digits;
}

void run_summary(Context& ctx) {
    const auto layers = split_layers(ctx.log);
    ctx.out << "users=" << pretty_count(ctx.log.users().size()) << '\n'
            << "events=" << pretty_count(ctx.log.size()) << '\n'
            << "e_plus=" << pretty_count(layers.rewarding.size()) << '\n'
            << "e_minus=" << pretty_count(layers.punitive.size()) << '\n'
            << "rejected=" << pretty_count(ctx.report.rejected) << '\n';
    ctx.dir.write("summary.csv", [&](std::ostream& os) {
        os << "key,value\n"
           << "users," << ctx.log.users().size() << '\n'
           << "events," << ctx.log.size() << '\n'
           << "e_plus," << layers.rewarding.size() << '\n'
           << "e_minus," << layers.punitive.size() << '\n'
           << "rejected," << ctx.report.rejected << '\n';
    });
}

void run_ingest_check(Context& ctx) {
    ctx.out << "kept=" << ctx.report.kept << "\nrejected=" << ctx.report.rejected << "\nusers=" << ctx.report.users
            << "\nheader_skipped=" << (ctx.report.header_skipped ? "yes" : "no") << '\n';
    for (const auto& d : ctx.report.diagnostics) ctx.err << "line " << d.line << ": " << d.reason << '\n';
    ctx.dir.write("ingest_rejections.csv", [&](std::ostream& os) {
        os << "line,reason\n";
        for (const auto& d : ctx.report.diagnostics) os << d.line << ",\"" << d.reason << "\"\n";
    });
}

void run_static(Context& ctx) {
    if (!ctx.config.seed) throw UsageError("static analysis needs --seed for the null model");
    const auto layers = split_layers(ctx.log);
    const auto metrics = node_metrics(ctx.log);

    for (auto layer : {Layer::rewarding, Layer::punitive}) {
        const auto& view = layers[layer];
        const std::string tag = layer == Layer::rewarding ? "plus" : "minus";
        if (view.empty()) {
            ctx.err << "warning: " << to_string(layer) << " layer is empty; skipping its spectra\n";
            continue;
        }
        ctx.dir.write("weights_" + tag + ".csv", [&](std::ostream& os) {
            csv::write_distribution(os, weight_distribution(view), "weight");
        });
        const auto null = configuration_null(view, ctx.config.null_samples, *ctx.config.seed);
        for (const auto& w : null.warnings) ctx.err << "warning: " << to_string(layer) << " null model: " << w << '\n';
        const auto spectrum = clustering_spectrum(view);
        ctx.dir.write("clustering_" + tag + ".csv", [&](std::ostream& os) {
            csv::write_clustering_spectrum(os, spectrum, &null);
        });
        ctx.dir.write("clustering_" + tag + "_logbinned.csv", [&](std::ostream& os) {
            csv::write_log_binned_spectrum(os, log_bin_spectrum(spectrum), "mean_clustering");
        });
        ctx.dir.write("clustering_null_" + tag + ".csv", [&](std::ostream& os) {
            os << "empirical_mean,null_mean,null_std,samples,swaps_per_edge,degrees_preserved,seed\n"
               << csv::number(mean_clustering(view)) << ',' << csv::number(null.mean_clustering) << ','
               << csv::number(null.std_clustering) << ',' << null.sample_mean_clustering.size() << ','
               << null.swaps_per_edge << ',' << (null.degrees_preserved ? 1 : 0) << ',' << *ctx.config.seed << '\n';
        });
        const auto annd = avg_neighbor_degree_spectrum(view);
        ctx.dir.write("annd_" + tag + ".csv", [&](std::ostream& os) {
            csv::write_spectrum(os, annd, "degree", "mean_neighbor_degree", "std");
        });
        ctx.dir.write("annd_" + tag + "_logbinned.csv", [&](std::ostream& os) {
            csv::write_log_binned_spectrum(os, log_bin_spectrum(annd), "mean_neighbor_degree");
        });
        ctx.dir.write("rho_by_kin_" + tag + ".csv", [&](std::ostream& os) {
            csv::write_spectrum(os, reputation_by_indegree(metrics, layer), "k_in", "mean_rho", "std_rho");
        });
    }

    ctx.dir.write("clustering_sublayers.csv", [&](std::ostream& os) {
        const auto heavy = filter_weights(layers.rewarding, [](int w) { return w > 1; });
        const auto unit = filter_weights(layers.rewarding, [](int w) { return w == 1; });
        std::vector<UserId> parent_nodes = undirected_projection(layers.rewarding).nodes;
        os << "sublayer,convention,mean_clustering\n";
        for (const auto& [name, view] : {std::pair{"w_gt_1", &heavy}, std::pair{"w_eq_1", &unit}}) {
            os << name << ",sublayer_nodes," << csv::number(mean_clustering(*view)) << '\n';
            os << name << ",degree_ge_2_only," << csv::number(mean_clustering(*view, {false})) << '\n';
            os << name << ",parent_layer_nodes," << csv::number(mean_clustering(*view, {}, parent_nodes)) << '\n';
        }
    });

    if (!metrics.empty()) {
        const auto dists = reputation_distributions(metrics);
        ctx.dir.write("reputation_plus.csv", [&](std::ostream& os) { csv::write_distribution(os, dists.positive, "rho_plus"); });
        ctx.dir.write("reputation_minus.csv", [&](std::ostream& os) { csv::write_distribution(os, dists.negative, "rho_minus"); });
        ctx.dir.write("reputation_global.csv", [&](std::ostream& os) { csv::write_distribution(os, dists.global, "rho"); });
        const auto report = ranking_report(metrics);
        ctx.dir.write("tau_matrix.csv", [&](std::ostream& os) { csv::write_tau_matrix(os, report); });
        ctx.dir.write("ranking_by_kin_plus.csv", [&](std::ostream& os) { csv::write_rank_rows(os, report); });
    }
}

void run_categories(Context& ctx) {
    const auto metrics = node_metrics(ctx.log);
    const auto labels = categorize(metrics, ctx.config.thresholds);
    ctx.dir.write("categories.csv", [&](std::ostream& os) { csv::write_categories(os, metrics, labels); });
    const auto summaries = category_summary(metrics, labels);
    ctx.dir.write("category_quantiles.csv", [&](std::ostream& os) { csv::write_category_quantiles(os, summaries); });
    ctx.dir.write("reputation_vs_kin.csv", [&](std::ostream& os) {
        csv::write_scatter(os, reputation_vs_indegree_scatter(metrics, labels));
    });
    ctx.dir.write("reference_lines.csv", [&](std::ostream& os) { csv::write_reference_lines(os); });
    for (const auto& s : summaries) ctx.out << to_string(s.label) << '=' << s.users << '\n';
}

void run_temporal(Context& ctx) {
    std::vector<AnnotationWindow> windows;
    if (ctx.config.annotations) windows = load_annotations(*ctx.config.annotations);
    const int local = ctx.config.tz_shift_hours;
    for (const auto& [suffix, shift] : {std::pair{std::string("utc"), 0}, std::pair{std::string("local"), local}}) {
        ctx.dir.write("daily_series_" + suffix + ".csv", [&](std::ostream& os) {
            csv::write_daily_series(os, daily_series(ctx.log, shift), windows);
        });
        ctx.dir.write("circadian_" + suffix + ".csv", [&](std::ostream& os) {
            csv::write_profile(os, circadian_profile(ctx.log, shift), "hour");
        });
        ctx.dir.write("weekly_" + suffix + ".csv", [&](std::ostream& os) {
            csv::write_profile(os, weekly_profile(ctx.log, shift), "weekday");
        });
    }
    ctx.dir.write("active_days.csv", [&](std::ostream& os) { csv::write_active_days(os, activity_calendar(ctx.log)); });
    for (auto layer : {Layer::rewarding, Layer::punitive}) {
        const std::string tag = layer == Layer::rewarding ? "plus" : "minus";
        const auto dist = interevent_distribution(ctx.log, layer);
        ctx.dir.write("interevent_" + tag + ".csv", [&](std::ostream& os) {
            csv::write_distribution(os, dist.distribution, "delta_seconds");
        });
        ctx.dir.write("interevent_" + tag + "_logbinned.csv", [&](std::ostream& os) {
            csv::write_log_bins(os, dist.binned, "delta_seconds");
        });
    }
    ctx.dir.write("burstiness.csv", [&](std::ostream& os) { csv::write_burstiness(os, yearly_burstiness(ctx.log)); });
    ctx.dir.write("temporal_metadata.csv", [&](std::ostream& os) {
        os << "key,value\ntz_shift_hours," << local << "\ninterevent_unit,seconds\nburstiness_year_zone,UTC\n";
    });
}

void run_dynamics(Context& ctx) {
    if (ctx.log.empty()) {
        ctx.err << "warning: empty log; no snapshots\n";
        return;
    }
    MetricsMap last;
    SnapshotFold(ctx.log).run([&](const SnapshotState& s) {
        if (s.day() == day_of(ctx.log.last_time())) last = s.to_map();
    });
    if (last != node_metrics(ctx.log)) throw std::logic_error("final snapshot disagrees with full-log node metrics");
    ctx.dir.write("gini.csv", [&](std::ostream& os) { csv::write_gini_series(os, gini_series(ctx.log)); });
    ctx.dir.write("topk_stability.csv", [&](std::ostream& os) {
        csv::write_stability_series(os, topk_stability_series(ctx.log, ctx.config.top_k));
    });
    ctx.dir.write("dynamics_metadata.csv", [&](std::ostream& os) {
        os << "key,value\nsnapshot_zone,UTC\ntop_k," << ctx.config.top_k
           << "\ntie_break,descending value then ascending user id\ngini_population,users with positive value\n";
    });
}

void run_trajectories(Context& ctx) {
    const auto k = ctx.config.top_k;
    const auto& t = ctx.config.thresholds;
    ctx.dir.write("trajectories_top_positive.csv", [&](std::ostream& os) {
        csv::write_trajectories(os, trajectories(ctx.log, TrajectorySelection::top_k_positive, k, t));
    });
    ctx.dir.write("trajectories_top_negative.csv", [&](std::ostream& os) {
        csv::write_trajectories(os, trajectories(ctx.log, TrajectorySelection::top_k_negative, k, t));
    });
    ctx.dir.write("trajectories_categories.csv", [&](std::ostream& os) {
        csv::write_trajectories(os, trajectories(ctx.log, TrajectorySelection::by_category, k, t));
    });
}

std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(OutputDir& dir, const std::string& subcommand, const RunConfig& config,
                    const std::string& checksum, const std::vector<std::string>& failures) {
    auto files = dir.files();
    dir.write("manifest.txt", [&](std::ostream& os) {
        os << "tool=wot\nversion=" << kToolVersion << "\nsubcommand=" << subcommand << '\n';
        for (const auto& [key, value] : config.entries()) os << "config." << key << '=' << value << '\n';
        if (subcommand == "synth") {
            os << "config.users=" << config.synth.n_users << "\nconfig.events=" << config.synth.n_events
               << "\nconfig.positive-fraction=" << csv::number(config.synth.positive_fraction) << '\n';
        }
        os << "input_fnv1a64=" << checksum << '\n';
        for (const auto& f : files) os << "file=" << f << '\n';
        for (const auto& f : failures) os << "failed=" << f << '\n';
        os << "created_utc=" << utc_now() << '\n';
    });
}

}  // namespace

int run(const std::string& subcommand, const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::vector<std::string> known(std::begin(kSubcommands), std::end(kSubcommands));
    if (std::find(known.begin(), known.end(), subcommand) == known.end()) {
        err << "unknown subcommand '" << subcommand << "'\n";
        return kUsageError;
    }
    try {
        if (subcommand == "synth") {
            if (!config.seed) throw UsageError("synth needs --seed");
            SynthConfig sc = config.synth;
            sc.seed = *config.seed;
            EventLog log;
            try {
                log = synth_log(sc);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            OutputDir dir(config.output_dir);
            dir.write("synth.csv", [&](std::ostream& os) { csv::write_events(os, log); });
            write_manifest(dir, subcommand, config, "", {});
            out << "wrote " << (config.output_dir / "synth.csv").string() << " (" << log.size() << " events)\n";
            return kSuccess;
        }
        if ((subcommand == "static" || subcommand == "all") && !config.seed) {
            throw UsageError(subcommand + " needs --seed for the null model");
        }
        if (config.input.empty()) {
            err << "error: no input file given (--input)\n";
            return kInputError;
        }
        IngestResult ingested;
        std::string checksum;
        try {
            ingested = ingest_file(config.input, config.mode);
            checksum = file_checksum(config.input);
        } catch (const IngestError& e) {
            err << "input error: " << e.what() << '\n';
            return kInputError;
        }
        if (ingested.report.rejected > 0) {
            err << "warning: rejected " << ingested.report.rejected << " record(s); see ingest-check\n";
        }
        OutputDir dir(config.output_dir);
        Context ctx{config, out, err, dir, ingested.log, ingested.report};
        std::vector<std::pair<std::string, void (*)(Context&)>> steps;
        if (subcommand == "ingest-check") steps = {{"ingest-check", run_ingest_check}};
        if (subcommand == "summary") steps = {{"summary", run_summary}};
        if (subcommand == "static") steps = {{"static", run_static}};
        if (subcommand == "categories") steps = {{"categories", run_categories}};
        if (subcommand == "temporal") steps = {{"temporal", run_temporal}};
        if (subcommand == "dynamics") steps = {{"dynamics", run_dynamics}};
        if (subcommand == "trajectories") steps = {{"trajectories", run_trajectories}};
        if (subcommand == "all") {
            steps = {{"summary", run_summary},       {"static", run_static},     {"categories", run_categories},
                     {"temporal", run_temporal},     {"dynamics", run_dynamics}, {"trajectories", run_trajectories}};
        }
        std::vector<std::string> failures;
        for (const auto& [name, step] : steps) {
            try {
                step(ctx);
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception& e) {
                err << "analysis error in " << name << ": " << e.what() << '\n';
                failures.push_back(name);
            }
        }
        write_manifest(dir, subcommand, config, checksum, failures);
        return failures.empty() ? kSuccess : kAnalysisError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kAnalysisError;
    }
}

}  // namespace wot
