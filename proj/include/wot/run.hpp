#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wot/category.hpp"
#include "wot/event_log.hpp"
#include "wot/synth.hpp"

namespace wot {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kInputError = 2, kAnalysisError = 3 };

struct RunConfig {
    std::filesystem::path input;
    std::filesystem::path output_dir = "wot-out";
    int tz_shift_hours = -6;
    CategoryThresholds thresholds;
    std::size_t top_k = 10;
    std::size_t null_samples = 20;
    std::optional<std::uint64_t> seed;
    IngestMode mode = IngestMode::lenient;
    std::optional<std::filesystem::path> annotations;
    SynthConfig synth;  // used by the synth subcommand only

    /// Flat `key=value` rendering, one entry per line, in a fixed order.
    std::vector<std::pair<std::string, std::string>> entries() const;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Applies one `key=value` setting. Keys match the long flag names without
/// the leading dashes (input, out, tz-shift, thresholds, topk, null-samples,
/// seed, mode, annotations, users, events, positive-fraction, score-model,
/// target-model). Throws UsageError on unknown keys or bad values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Reads a flat config file: `key=value` lines, `#` comments, blank lines.
void apply_config_file(RunConfig& config, std::istream& in);

inline constexpr std::string_view kSubcommands[] = {"ingest-check", "summary",  "static",       "categories", "temporal",
                                                    "dynamics",     "trajectories", "synth", "all"};

/// Executes one subcommand. Human-readable progress goes to `out`, problems
/// to `err`. Returns an ExitCode.
int run(const std::string& subcommand, const RunConfig& config, std::ostream& out, std::ostream& err);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex digits.
std::string file_checksum(const std::filesystem::path& path);

}  // namespace wot
