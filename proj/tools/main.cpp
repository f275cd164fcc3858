#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <map>

#include "tweetmarket/cli/commands.hpp"
#include "tweetmarket/core/error.hpp"
#include "tweetmarket/version.hpp"

namespace {

using namespace tweetmarket;

std::string dashed(std::string key) {
    for (auto& ch : key) {
        if (ch == '_') ch = '-';
    }
    return key;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twitter sentiment and stock market event analysis"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_file;
    std::vector<std::string> overrides;
    std::map<std::string, std::string> flags;
    app.add_option("--config", config_file, "key = value configuration file");
    app.add_option("--set", overrides, "key=value override, repeatable");
    for (const auto& key : cli::RunConfig::keys()) {
        std::string names = "--" + key;
        if (key.find('_') != std::string::npos) names += ",--" + dashed(key);
        app.add_option_function<std::string>(names, [&flags, key](const std::string& v) { flags[key] = v; },
                                             "config key " + key);
    }

    using Command = cli::CommandResult (*)(const cli::RunConfig&);
    Command command = nullptr;
    const auto sub = [&](CLI::App& parent, const char* name, const char* help, Command fn) {
        parent.add_subcommand(name, help)->callback([&command, fn] { command = fn; });
    };
    sub(app, "ingest", "validate inputs and summarize tickers, date ranges and tweet totals", cli::cmd_ingest);
    sub(app, "correlate", "Pearson correlation of daily polarity and returns per ticker", cli::cmd_correlate);
    sub(app, "granger", "Granger causality between Twitter and market series per ticker", cli::cmd_granger);
    sub(app, "events", "detect Twitter volume peaks and assign polarity", cli::cmd_events);
    sub(app, "study", "market-model event study per polarity class", cli::cmd_study);
    auto* sentiment = app.add_subcommand("sentiment", "ordinal sentiment classifier");
    sentiment->require_subcommand(1);
    sub(*sentiment, "train", "train a model from labeled tweets", cli::cmd_sentiment_train);
    sub(*sentiment, "eval", "evaluate a model, a predictions file or cross-validation", cli::cmd_sentiment_eval);
    sub(*sentiment, "predict", "label texts with a trained model", cli::cmd_sentiment_predict);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        cli::RunConfig config;
        if (!config_file.empty()) cli::apply_config_file(config, config_file);
        if (const char* out = std::getenv("TWEETMARKET_OUT"); out && *out) config.set("out", out);
        for (const auto& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw tweetmarket::ValidationError("--set expects key=value, got '" + kv + "'");
            config.set(kv.substr(0, eq), kv.substr(eq + 1));
        }
        for (const auto& [key, value] : flags) config.set(key, value);

        const auto result = command(config);
        for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
        for (const auto& f : result.files) std::cout << "wrote " << f.string() << '\n';
        if (!result.summary.empty()) std::cout << result.summary << '\n';
        return 0;
    } catch (const std::exception& e) {
        std::cerr << cli::error_json(e) << '\n';
        return cli::exit_code_for(e);
    }
}
