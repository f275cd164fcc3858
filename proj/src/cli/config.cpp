#include "tweetmarket/cli/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "tweetmarket/core/csv.hpp"
#include "tweetmarket/core/error.hpp"
#include "tweetmarket/version.hpp"

namespace tweetmarket::cli {

namespace {

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) throw ValidationError("invalid value for " + key + ": '" + value + "'");
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ValidationError("invalid value for " + key + ": '" + value + "' (expected true or false)");
}

std::string fmt(double v) { return core::format_double(v); }

struct Field {
    std::function<void(RunConfig&, const std::string&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

#define TM_PATH(name)                                                                       \
    {                                                                                       \
        #name, {[](RunConfig& c, const std::string&, const std::string& v) { c.name = v; }, \
                [](const RunConfig& c) { return c.name.string(); } }                        \
    }

const std::map<std::string, Field>& fields() {
    static const std::map<std::string, Field> table = {
        TM_PATH(prices),
        TM_PATH(tweets),
        TM_PATH(market),
        TM_PATH(ea_dates),
        TM_PATH(labeled),
        TM_PATH(model),
        TM_PATH(predictions),
        TM_PATH(input),
        TM_PATH(events),
        TM_PATH(out),
        {"market_ticker", {[](RunConfig& c, const std::string&, const std::string& v) { c.market_ticker = v; },
                           [](const RunConfig& c) { return c.market_ticker; }}},
        {"text", {[](RunConfig& c, const std::string&, const std::string& v) { c.text = v; },
                  [](const RunConfig& c) { return c.text; }}},
        {"half_window", {[](RunConfig& c, const std::string& k, const std::string& v) { c.peaks.half_window = parse_number<int>(k, v); },
                         [](const RunConfig& c) { return std::to_string(c.peaks.half_window); }}},
        {"min_activity", {[](RunConfig& c, const std::string& k, const std::string& v) { c.peaks.min_activity = parse_number<double>(k, v); },
                          [](const RunConfig& c) { return fmt(c.peaks.min_activity); }}},
        {"threshold", {[](RunConfig& c, const std::string& k, const std::string& v) { c.peaks.threshold = parse_number<double>(k, v); },
                       [](const RunConfig& c) { return fmt(c.peaks.threshold); }}},
        {"min_separation", {[](RunConfig& c, const std::string& k, const std::string& v) { c.peaks.min_separation = parse_number<int>(k, v); },
                            [](const RunConfig& c) { return std::to_string(c.peaks.min_separation); }}},
        {"polarity_lower", {[](RunConfig& c, const std::string& k, const std::string& v) { c.thresholds.lower = parse_number<double>(k, v); },
                            [](const RunConfig& c) { return fmt(c.thresholds.lower); }}},
        {"polarity_upper", {[](RunConfig& c, const std::string& k, const std::string& v) { c.thresholds.upper = parse_number<double>(k, v); },
                            [](const RunConfig& c) { return fmt(c.thresholds.upper); }}},
        {"thresholds", {[](RunConfig& c, const std::string& k, const std::string& v) {
                            if (v != "fixed" && v != "derive") throw ValidationError(k + " must be fixed or derive");
                            c.derive_thresholds = v == "derive";
                        },
                        [](const RunConfig& c) { return std::string(c.derive_thresholds ? "derive" : "fixed"); }}},
        {"estimation_length", {[](RunConfig& c, const std::string& k, const std::string& v) { c.windows.estimation_length = parse_number<int>(k, v); },
                               [](const RunConfig& c) { return std::to_string(c.windows.estimation_length); }}},
        {"first_lag", {[](RunConfig& c, const std::string& k, const std::string& v) { c.windows.first_lag = parse_number<int>(k, v); },
                       [](const RunConfig& c) { return std::to_string(c.windows.first_lag); }}},
        {"last_lag", {[](RunConfig& c, const std::string& k, const std::string& v) { c.windows.last_lag = parse_number<int>(k, v); },
                      [](const RunConfig& c) { return std::to_string(c.windows.last_lag); }}},
        {"max_order", {[](RunConfig& c, const std::string& k, const std::string& v) { c.granger.max_order = parse_number<std::size_t>(k, v); },
                       [](const RunConfig& c) { return std::to_string(c.granger.max_order); }}},
        {"level", {[](RunConfig& c, const std::string& k, const std::string& v) { c.granger.level = parse_number<double>(k, v); },
                   [](const RunConfig& c) { return fmt(c.granger.level); }}},
        {"ljung_box_lags", {[](RunConfig& c, const std::string& k, const std::string& v) { c.granger.ljung_box_lags = parse_number<std::size_t>(k, v); },
                            [](const RunConfig& c) { return std::to_string(c.granger.ljung_box_lags); }}},
        {"missing_polarity", {[](RunConfig& c, const std::string& k, const std::string& v) {
                                  if (v == "zero") {
                                      c.missing_polarity = core::MissingPolarity::Zero;
                                  } else if (v == "drop") {
                                      c.missing_polarity = core::MissingPolarity::Drop;
                                  } else {
                                      throw ValidationError(k + " must be zero or drop");
                                  }
                              },
                              [](const RunConfig& c) {
                                  return std::string(c.missing_polarity == core::MissingPolarity::Zero ? "zero" : "drop");
                              }}},
        {"lambda", {[](RunConfig& c, const std::string& k, const std::string& v) { c.sentiment.train.lambda = parse_number<double>(k, v); },
                    [](const RunConfig& c) { return fmt(c.sentiment.train.lambda); }}},
        {"epochs", {[](RunConfig& c, const std::string& k, const std::string& v) { c.sentiment.train.epochs = parse_number<int>(k, v); },
                    [](const RunConfig& c) { return std::to_string(c.sentiment.train.epochs); }}},
        {"normalize", {[](RunConfig& c, const std::string& k, const std::string& v) { c.sentiment.normalize = parse_bool(k, v); },
                       [](const RunConfig& c) { return std::string(c.sentiment.normalize ? "true" : "false"); }}},
        {"folds", {[](RunConfig& c, const std::string& k, const std::string& v) { c.folds = parse_number<std::size_t>(k, v); },
                   [](const RunConfig& c) { return std::to_string(c.folds); }}},
        {"seed", {[](RunConfig& c, const std::string& k, const std::string& v) {
                      c.seed = parse_number<std::uint64_t>(k, v);
                      c.sentiment.train.seed = c.seed;
                  },
                  [](const RunConfig& c) { return std::to_string(c.seed); }}},
        {"workers", {[](RunConfig& c, const std::string& k, const std::string& v) { c.workers = parse_number<std::size_t>(k, v); },
                     [](const RunConfig& c) { return std::to_string(c.workers); }}},
    };
    return table;
}

#undef TM_PATH

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
    const auto it = fields().find(key);
    if (it == fields().end()) throw ValidationError("unknown configuration key '" + key + "'");
    it->second.set(*this, key, value);
}

const std::vector<std::string>& RunConfig::keys() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, f] : fields()) out.push_back(k);
        return out;
    }();
    return names;
}

void RunConfig::validate() const {
    peaks.validate();
    thresholds.validate();
    windows.validate();
    sentiment.train.validate();
    if (granger.max_order < 1) throw ValidationError("max_order must be >= 1");
    if (!(granger.level > 0 && granger.level < 1)) throw ValidationError("level must lie in (0, 1)");
    if (granger.ljung_box_lags < 1) throw ValidationError("ljung_box_lags must be >= 1");
    if (folds < 2) throw ValidationError("folds must be >= 2");
    if (workers < 1) throw ValidationError("workers must be >= 1");
    if (market_ticker.empty()) throw ValidationError("market_ticker must not be empty");
}

void RunConfig::require_file(const std::filesystem::path& path, const std::string& key) {
    if (path.empty()) throw ValidationError("missing required input '" + key + "'");
    if (!std::filesystem::exists(path)) throw ValidationError(key + " file does not exist: " + path.string());
}

std::string RunConfig::canonical() const {
    std::string out;
    for (const auto& [k, f] : fields()) out += k + "=" + f.get(*this) + "\n";
    return out;
}

std::string RunConfig::hash() const {
    // Output location and worker count do not change results, so they stay out of the hash.
    std::string text;
    for (const auto& [k, f] : fields()) {
        if (k != "out" && k != "workers") text += k + "=" + f.get(*this) + "\n";
    }
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string RunConfig::header() const {
    return std::string("# tweetmarket ") + kVersion + " config=" + hash() + " seed=" + std::to_string(seed);
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file " + path.string());
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto t = core::trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string_view::npos) throw ParseError(path.string(), number, "expected key = value");
        const std::string key(core::trim(t.substr(0, eq)));
        const std::string value(core::trim(t.substr(eq + 1)));
        try {
            config.set(key, value);
        } catch (const ValidationError& e) {
            throw ParseError(path.string(), number, e.what());
        }
    }
}

}  // namespace tweetmarket::cli
