#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wot/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Web-of-trust rating network analysis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wot::kToolVersion));

    std::string config_file;
    std::vector<std::pair<std::string, std::string>> given;
    struct Flag {
        std::string name;
        std::string help;
        std::string value;
    };
    std::vector<Flag> flags = {
        {"input", "rating CSV (plain or gzip): rater,ratee,score,epoch_seconds", ""},
        {"out", "output directory (created if absent)", ""},
        {"tz-shift", "local timezone shift in hours, [-12, 14] (default -6)", ""},
        {"thresholds", "category thresholds LOW,HIGH on the negative share (default 0.25,0.75)", ""},
        {"topk", "length of top-k lists (default 10)", ""},
        {"null-samples", "configuration-model samples (default 20)", ""},
        {"seed", "master seed for every randomized step", ""},
        {"mode", "ingest mode: strict or lenient (default lenient)", ""},
        {"annotations", "annotation windows CSV: label,start_date,end_date", ""},
        {"users", "synth: number of users", ""},
        {"events", "synth: number of events", ""},
        {"positive-fraction", "synth: probability of a positive score", ""},
        {"score-model", "synth: uniform or norm", ""},
        {"target-model", "synth: uniform or preferential", ""},
    };

    std::string chosen;
    const std::map<std::string, std::string> about = {
        {"ingest-check", "validate the input and list rejected records"},
        {"summary", "user, event and layer counts"},
        {"static", "weight and reputation distributions, clustering, null model, assortativity, rank correlations"},
        {"categories", "trustworthy / controversial / untrusted labels and their quantiles"},
        {"temporal", "daily series, interevent times, burstiness, circadian and weekly profiles"},
        {"dynamics", "daily Gini index and top-k stability"},
        {"trajectories", "per-event reputation trajectories of selected users"},
        {"synth", "write a synthetic rating log"},
        {"all", "summary, static, categories, temporal, dynamics and trajectories"},
    };
    for (auto name : wot::kSubcommands) {
        auto* sub = app.add_subcommand(std::string(name), about.at(std::string(name)));
        sub->add_option("--config", config_file, "flat key=value config file; flags override it");
        for (auto& flag : flags) sub->add_option("--" + flag.name, flag.value, flag.help);
        sub->callback([&chosen, sub] { chosen = sub->get_name(); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? wot::kSuccess : wot::kUsageError;
    }

    wot::RunConfig config;
    try {
        if (!config_file.empty()) {
            std::ifstream in(config_file);
            if (!in) throw wot::UsageError("cannot open config file " + config_file);
            wot::apply_config_file(config, in);
        }
        auto* sub = app.get_subcommand(chosen);
        for (const auto& flag : flags) {
            if (sub->count("--" + flag.name) > 0) wot::apply_setting(config, flag.name, flag.value);
        }
    } catch (const wot::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return wot::kUsageError;
    }
    return wot::run(chosen, config, std::cout, std::cerr);
}
