#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tweetmarket/core/series.hpp"
#include "tweetmarket/events/event.hpp"
#include "tweetmarket/sentiment/ordinal.hpp"
#include "tweetmarket/stats/granger.hpp"
#include "tweetmarket/study/market_model.hpp"

namespace tweetmarket::cli {

/// Settings shared by all commands. Sources, lowest precedence first: defaults, the
/// key=value config file, the TWEETMARKET_OUT environment variable (output directory
/// only), command-line flags.
struct RunConfig {
    // Inputs
    std::filesystem::path prices, tweets, market, ea_dates, labeled, model, predictions, input, events;
    std::string market_ticker = "DJIA";

    events::PeakParams peaks;
    events::PolarityThresholds thresholds;
    bool derive_thresholds = false;
    study::StudyWindows windows;
    stats::PipelineOptions granger;
    core::MissingPolarity missing_polarity = core::MissingPolarity::Zero;
    sentiment::OrdinalOptions sentiment;
    std::size_t folds = 10;
    std::string text;  // single text for `sentiment predict`

    std::filesystem::path out = "out";
    std::uint64_t seed = 1;
    std::size_t workers = 1;

    /// Applies one `key = value` setting. Throws ValidationError on unknown keys or bad values.
    void set(const std::string& key, const std::string& value);
    /// Every key accepted by set().
    static const std::vector<std::string>& keys();

    /// Checks every parameter against its module invariants.
    void validate() const;
    /// Throws ValidationError when `path` is empty or does not exist.
    static void require_file(const std::filesystem::path& path, const std::string& key);

    /// `key=value` lines for every setting, in key order.
    std::string canonical() const;
    /// FNV-1a 64 of canonical() without `out` and `workers`, as 16 hex digits.
    std::string hash() const;
    /// `# tweetmarket <version> config=<hash> seed=<seed>`
    std::string header() const;
};

/// Reads `key = value` lines; blank lines and lines starting with '#' are skipped.
/// Errors carry the file name and line.
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

}  // namespace tweetmarket::cli
