#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wot/category.hpp"
#include "wot/dynamics.hpp"
#include "wot/event_log.hpp"
#include "wot/gettrust.hpp"
#include "wot/layers.hpp"
#include "wot/metrics.hpp"
#include "wot/run.hpp"
#include "wot/static_analysis.hpp"
#include "wot/synth.hpp"
#include "wot/temporal.hpp"

namespace py = pybind11;
using namespace wot;

namespace {

Timestamp cutoff_or_end(std::optional<Timestamp> cutoff) { return cutoff.value_or(kEndOfTime); }

py::dict report_dict(const IngestReport& r) {
    py::list diagnostics;
    for (const auto& d : r.diagnostics) diagnostics.append(py::make_tuple(d.line, d.reason));
    py::dict out;
    out["kept"] = r.kept;
    out["rejected"] = r.rejected;
    out["users"] = r.users;
    out["header_skipped"] = r.header_skipped;
    out["diagnostics"] = diagnostics;
    return out;
}

IngestMode mode_of(bool strict) { return strict ? IngestMode::strict : IngestMode::lenient; }

std::optional<double> nan_to_none(double v) {
    if (std::isnan(v)) return std::nullopt;
    return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Signed, timestamped trust-rating network analysis";
    m.attr("__version__") = std::string(kToolVersion);

    py::register_exception<IngestError>(m, "IngestError", PyExc_ValueError);

    py::enum_<Layer>(m, "Layer")
        .value("rewarding", Layer::rewarding)
        .value("punitive", Layer::punitive);

    py::class_<RatingEvent>(m, "RatingEvent")
        .def(py::init<UserId, UserId, int, Timestamp>(), py::arg("rater"), py::arg("ratee"), py::arg("score"),
             py::arg("time"))
        .def_readonly("rater", &RatingEvent::rater)
        .def_readonly("ratee", &RatingEvent::ratee)
        .def_readonly("score", &RatingEvent::score)
        .def_readonly("time", &RatingEvent::time)
        .def("__eq__", [](const RatingEvent& a, const RatingEvent& b) { return a == b; })
        .def("__iter__", [](const RatingEvent& e) {
            return py::iter(py::make_tuple(e.rater, e.ratee, e.score, e.time));
        })
        .def("__repr__", [](const RatingEvent& e) {
            std::ostringstream os;
            os << "RatingEvent(" << e.rater << ", " << e.ratee << ", " << e.score << ", " << e.time << ")";
            return os.str();
        });

    py::class_<EventLog>(m, "EventLog")
        .def(py::init<>())
        .def(py::init([](const std::vector<std::tuple<UserId, UserId, int, Timestamp>>& rows) {
                 std::vector<RatingEvent> events;
                 events.reserve(rows.size());
                 for (const auto& [a, b, s, t] : rows) events.push_back({a, b, s, t});
                 return EventLog(std::move(events));
             }),
             py::arg("events"))
        .def("__len__", &EventLog::size)
        .def_property_readonly("events", [](const EventLog& log) {
            return std::vector<RatingEvent>(log.events().begin(), log.events().end());
        })
        .def_property_readonly("users", [](const EventLog& log) {
            return std::vector<UserId>(log.users().begin(), log.users().end());
        })
        .def_property_readonly("first_time", &EventLog::first_time)
        .def_property_readonly("last_time", &EventLog::last_time)
        .def("truncated", &EventLog::truncated, py::arg("cutoff"));

    m.def(
        "ingest_file",
        [](const std::filesystem::path& path, bool strict) {
            auto r = ingest_file(path, mode_of(strict));
            return py::make_tuple(std::move(r.log), report_dict(r.report));
        },
        py::arg("path"), py::arg("strict") = false,
        "Reads rater,ratee,score,time records from a csv or csv.gz file. Returns (log, report).");
    m.def(
        "ingest_text",
        [](const std::string& text, bool strict) {
            std::istringstream in(text);
            auto r = ingest(in, mode_of(strict));
            return py::make_tuple(std::move(r.log), report_dict(r.report));
        },
        py::arg("text"), py::arg("strict") = false);

    py::class_<WeightedEdge>(m, "WeightedEdge")
        .def_readonly("source", &WeightedEdge::source)
        .def_readonly("target", &WeightedEdge::target)
        .def_readonly("weight", &WeightedEdge::weight)
        .def_readonly("time", &WeightedEdge::time);

    py::class_<LayerView>(m, "LayerView")
        .def_readonly("layer", &LayerView::layer)
        .def_readonly("edges", &LayerView::edges)
        .def("__len__", &LayerView::size)
        .def(
            "filter_weights",
            [](const LayerView& v, int min_weight, std::optional<int> max_weight) {
                return filter_weights(v, [&](int w) { return w >= min_weight && (!max_weight || w <= *max_weight); });
            },
            py::arg("min_weight"), py::arg("max_weight") = py::none());

    m.def(
        "split_layers",
        [](const EventLog& log, std::optional<Timestamp> cutoff) {
            auto pair = split_layers(log, cutoff_or_end(cutoff));
            return py::make_tuple(pair.rewarding, pair.punitive);
        },
        py::arg("log"), py::arg("cutoff") = py::none(), "Returns (rewarding, punitive) layer views.");

    py::class_<NodeMetrics>(m, "NodeMetrics")
        .def_readonly("k_in_plus", &NodeMetrics::k_in_plus)
        .def_readonly("k_in_minus", &NodeMetrics::k_in_minus)
        .def_readonly("k_out_plus", &NodeMetrics::k_out_plus)
        .def_readonly("k_out_minus", &NodeMetrics::k_out_minus)
        .def_readonly("rho_plus", &NodeMetrics::rho_plus)
        .def_readonly("rho_minus", &NodeMetrics::rho_minus)
        .def_readonly("rho", &NodeMetrics::rho)
        .def_property_readonly("k_in", &NodeMetrics::k_in)
        .def_property_readonly("k_out", &NodeMetrics::k_out)
        .def("__eq__", [](const NodeMetrics& a, const NodeMetrics& b) { return a == b; });

    m.def(
        "node_metrics",
        [](const EventLog& log, std::optional<Timestamp> cutoff) { return node_metrics(log, cutoff_or_end(cutoff)); },
        py::arg("log"), py::arg("cutoff") = py::none());
    m.def(
        "gettrust",
        [](const EventLog& log, UserId viewer, UserId target, std::optional<Timestamp> cutoff) {
            return gettrust(log, viewer, target, cutoff_or_end(cutoff));
        },
        py::arg("log"), py::arg("viewer"), py::arg("target"), py::arg("cutoff") = py::none());

    m.def(
        "synth_log",
        [](std::int64_t n_users, std::int64_t n_events, double positive_fraction, std::uint64_t seed,
           const std::string& score_model, const std::string& target_model, double event_rate, Timestamp start_time) {
            SynthConfig c;
            c.n_users = n_users;
            c.n_events = n_events;
            c.positive_fraction = positive_fraction;
            c.seed = seed;
            if (score_model == "uniform") {
                c.scores = ScoreModel::uniform;
            } else if (score_model == "norm") {
                c.scores = ScoreModel::norm;
            } else {
                throw py::value_error("score_model must be 'uniform' or 'norm'");
            }
            if (target_model == "uniform") {
                c.targets = TargetModel::uniform;
            } else if (target_model == "preferential") {
                c.targets = TargetModel::preferential;
            } else {
                throw py::value_error("target_model must be 'uniform' or 'preferential'");
            }
            c.event_rate = event_rate;
            c.start_time = start_time;
            return synth_log(c);
        },
        py::arg("n_users") = 100, py::arg("n_events") = 1000, py::arg("positive_fraction") = 0.9,
        py::arg("seed") = 0, py::arg("score_model") = "uniform", py::arg("target_model") = "uniform",
        py::arg("event_rate") = 1.0 / 3600.0, py::arg("start_time") = SynthConfig{}.start_time);

    m.def("gini", [](const std::vector<double>& v) { return gini(v); }, py::arg("values"));
    m.def(
        "kendall_tau_b",
        [](const std::vector<double>& a, const std::vector<double>& b) { return nan_to_none(kendall_tau_b(a, b)); },
        py::arg("a"), py::arg("b"), "Tau-b, or None when either side is constant.");
    m.def(
        "spearman", [](const std::vector<double>& a, const std::vector<double>& b) { return nan_to_none(spearman(a, b)); },
        py::arg("a"), py::arg("b"));
    m.def(
        "extended_jaccard",
        [](const std::vector<UserId>& a, const std::vector<UserId>& b, std::optional<std::size_t> k) {
            return k ? extended_jaccard(a, b, *k) : extended_jaccard(a, b);
        },
        py::arg("a"), py::arg("b"), py::arg("k") = py::none());
    m.def("set_jaccard", [](const std::vector<UserId>& a, const std::vector<UserId>& b) { return set_jaccard(a, b); },
          py::arg("a"), py::arg("b"));
    m.def("burstiness", [](const std::vector<double>& d) { return burstiness(d); }, py::arg("deltas"));

    m.def(
        "categorize",
        [](const EventLog& log, double low, double high) {
            std::map<UserId, std::string> out;
            for (const auto& [u, label] : categorize(node_metrics(log), CategoryThresholds{low, high})) {
                out[u] = std::string(to_string(label));
            }
            return out;
        },
        py::arg("log"), py::arg("low") = 0.25, py::arg("high") = 0.75,
        "Label per user: trustworthy, controversial, untrusted or uncategorized.");

    m.def(
        "local_clustering",
        [](const LayerView& v) {
            const auto g = undirected_projection(v);
            const auto c = local_clustering(g);
            std::map<UserId, double> out;
            for (std::size_t i = 0; i < g.nodes.size(); ++i) out[g.nodes[i]] = c[i];
            return out;
        },
        py::arg("layer"));
    m.def(
        "mean_clustering",
        [](const LayerView& v, bool include_low_degree) { return mean_clustering(v, ClusteringOptions{include_low_degree}); },
        py::arg("layer"), py::arg("include_low_degree") = true);
    m.def(
        "configuration_null",
        [](const LayerView& v, std::size_t n_samples, std::uint64_t seed, std::size_t threads) {
            NullModelOptions opts;
            opts.threads = threads;
            const auto n = configuration_null(v, n_samples, seed, opts);
            py::dict out;
            out["mean_clustering"] = n.mean_clustering;
            out["std_clustering"] = n.std_clustering;
            out["sample_mean_clustering"] = n.sample_mean_clustering;
            out["swaps_done"] = n.swaps_done;
            out["degrees_preserved"] = n.degrees_preserved;
            out["warnings"] = n.warnings;
            return out;
        },
        py::arg("layer"), py::arg("n_samples") = 20, py::arg("seed") = 0, py::arg("threads") = 0);
    m.def(
        "avg_neighbor_degree",
        [](const LayerView& v) {
            std::vector<std::tuple<std::int64_t, double, double, std::size_t>> rows;
            for (const auto& r : avg_neighbor_degree_spectrum(v)) rows.emplace_back(r.degree, r.mean, r.std, r.n_nodes);
            return rows;
        },
        py::arg("layer"), "Rows of (degree, mean, std, n_nodes).");

    m.def("interevent_times", &interevent_times, py::arg("log"), py::arg("layer"));
    m.def(
        "yearly_burstiness",
        [](const EventLog& log, int tz) {
            std::vector<std::tuple<int, Layer, double, std::size_t>> rows;
            for (const auto& r : yearly_burstiness(log, tz)) rows.emplace_back(r.year, r.layer, r.b, r.n_samples);
            return rows;
        },
        py::arg("log"), py::arg("tz_shift_hours") = 0);
    auto profile = [](const ActivityProfile& p) {
        py::dict out;
        out["rewarding"] = p.rewarding;
        out["punitive"] = p.punitive;
        out["rewarding_empty"] = p.rewarding_empty;
        out["punitive_empty"] = p.punitive_empty;
        return out;
    };
    m.def(
        "circadian_profile", [profile](const EventLog& log, int tz) { return profile(circadian_profile(log, tz)); },
        py::arg("log"), py::arg("tz_shift_hours") = 0);
    m.def(
        "weekly_profile", [profile](const EventLog& log, int tz) { return profile(weekly_profile(log, tz)); },
        py::arg("log"), py::arg("tz_shift_hours") = 0);
    m.def(
        "daily_series",
        [](const EventLog& log, int tz) {
            std::vector<std::tuple<std::string, std::int64_t, std::int64_t>> rows;
            for (const auto& r : daily_series(log, tz)) rows.emplace_back(r.day.iso(), r.count_plus, r.count_minus);
            return rows;
        },
        py::arg("log"), py::arg("tz_shift_hours") = 0);

    m.def(
        "gini_series",
        [](const EventLog& log, int tz, bool all_seen) {
            std::vector<std::tuple<std::string, std::optional<double>, std::optional<double>>> rows;
            for (const auto& r : gini_series(log, tz, all_seen ? GiniPopulation::all_seen : GiniPopulation::positive_only)) {
                rows.emplace_back(r.day.iso(), r.gini_plus, r.gini_minus);
            }
            return rows;
        },
        py::arg("log"), py::arg("tz_shift_hours") = 0, py::arg("all_seen") = false);
    m.def(
        "topk_stability",
        [](const EventLog& log, std::size_t k, int tz) {
            std::vector<std::tuple<std::string, double, double, double>> rows;
            for (const auto& r : topk_stability_series(log, k, tz)) {
                rows.emplace_back(r.day.iso(), r.j_plus, r.j_minus, r.j_global);
            }
            return rows;
        },
        py::arg("log"), py::arg("k") = 10, py::arg("tz_shift_hours") = 0,
        "Rows of (date, J_plus, J_minus, J_global) comparing each day's top-k lists with the day before.");

    m.def(
        "run",
        [](const std::string& subcommand, const std::map<std::string, std::string>& settings) {
            RunConfig config;
            try {
                for (const auto& [key, value] : settings) apply_setting(config, key, value);
            } catch (const UsageError& e) {
                throw py::value_error(e.what());
            }
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run(subcommand, config, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("subcommand"), py::arg("settings") = std::map<std::string, std::string>{},
        "Runs a CLI subcommand with flag-style settings. Returns (exit_code, stdout, stderr).");
}
