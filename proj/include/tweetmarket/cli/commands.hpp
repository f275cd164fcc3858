#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tweetmarket/cli/config.hpp"

namespace tweetmarket::cli {

/// What a command produced: files written (in the output directory) and a short summary.
struct CommandResult {
    std::vector<std::filesystem::path> files;
    std::string summary;
    std::vector<std::string> warnings;
};

CommandResult cmd_ingest(const RunConfig& config);
CommandResult cmd_correlate(const RunConfig& config);
CommandResult cmd_granger(const RunConfig& config);
CommandResult cmd_events(const RunConfig& config);
CommandResult cmd_study(const RunConfig& config);
CommandResult cmd_sentiment_train(const RunConfig& config);
CommandResult cmd_sentiment_eval(const RunConfig& config);
CommandResult cmd_sentiment_predict(const RunConfig& config);

/// Machine-readable error description for stderr:
/// {"error": {"type": ..., "message": ..., "file"?: ..., "line"?: ...}}.
std::string error_json(const std::exception& e);

/// Process exit code for an exception: 3 validation, 4 parse, 5 alignment or
/// numerical failure, 1 anything else.
int exit_code_for(const std::exception& e);

}  // namespace tweetmarket::cli
