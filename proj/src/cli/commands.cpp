#include "tweetmarket/cli/commands.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <variant>

#include "tweetmarket/cli/ingest.hpp"
#include "tweetmarket/core/csv.hpp"
#include "tweetmarket/core/error.hpp"
#include "tweetmarket/core/parallel.hpp"
#include "tweetmarket/events/event_io.hpp"
#include "tweetmarket/events/peaks.hpp"
#include "tweetmarket/events/polarity.hpp"
#include "tweetmarket/sentiment/evaluation.hpp"
#include "tweetmarket/sentiment/labeled_io.hpp"
#include "tweetmarket/stats/pearson.hpp"
#include "tweetmarket/study/run_study.hpp"
#include "tweetmarket/study/study_io.hpp"

namespace tweetmarket::cli {

namespace fs = std::filesystem;
using core::format_double;
using nlohmann::ordered_json;

namespace {

// Output files start with the provenance header; JSON files carry it as `generated_by`.
class Outputs {
public:
    Outputs(const RunConfig& config, CommandResult& result) : config_(config), result_(result) {
        fs::create_directories(config.out);
    }

    void text(const std::string& name, const std::function<void(std::ostream&)>& body) {
        std::ostringstream s;
        s << config_.header() << '\n';
        body(s);
        write(config_.out / name, s.str());
    }

    void json(const std::string& name, ordered_json j) {
        ordered_json doc;
        doc["generated_by"] = config_.header();
        for (auto& [k, v] : j.items()) doc[k] = v;
        write(config_.out / name, doc.dump(2) + "\n");
    }

private:
    void write(const fs::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ValidationError("cannot write " + path.string());
        out << content;
        result_.files.push_back(path);
    }

    const RunConfig& config_;
    CommandResult& result_;
};

Dataset dataset(const RunConfig& c, bool need_tweets) {
    RunConfig::require_file(c.prices, "prices");
    if (need_tweets) RunConfig::require_file(c.tweets, "tweets");
    if (!c.market.empty()) RunConfig::require_file(c.market, "market");
    auto data = load_dataset(c.prices, c.tweets, c.market, c.market_ticker);
    if (!data.market) throw ValidationError("no market index series (ticker " + c.market_ticker + ")");
    return data;
}

std::string range_or_empty(std::span<const core::Date> d, bool first) {
    if (d.empty()) return "";
    return (first ? d.front() : d.back()).to_string();
}

struct Detection {
    std::vector<events::Event> all;
    std::vector<events::Event> non_ea;
    events::PolarityThresholds thresholds;
    ordered_json log;
};

Detection detect(const RunConfig& c, const std::map<std::string, core::TweetDailySeries>& tweets,
                 const std::vector<events::EaDate>& ea) {
    std::vector<const core::TweetDailySeries*> series;
    for (const auto& [name, s] : tweets) series.push_back(&s);
    struct PerTicker {
        std::vector<events::Event> all, non_ea;
        std::string skipped;
    };
    const auto found = core::parallel_map(series.size(), c.workers, [&](std::size_t i) {
        PerTicker out;
        try {
            out.all = events::tag_ea(events::detect_peaks(*series[i], c.peaks), ea);
            out.non_ea = events::detect_non_ea(*series[i], ea, c.peaks);
        } catch (const ValidationError& e) {
            out.skipped = e.what();
        }
        return out;
    });

    Detection d;
    d.thresholds = c.thresholds;
    ordered_json skipped = ordered_json::array();
    std::vector<double> peak_polarity;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (!found[i].skipped.empty()) {
            skipped.push_back({{"ticker", series[i]->ticker()}, {"reason", found[i].skipped}});
            continue;
        }
        const auto pol = core::compute_polarity(*series[i]);
        for (const auto& e : found[i].all) {
            if (const auto p = pol.at(e.date)) peak_polarity.push_back(*p);
        }
    }
    ordered_json thresholds_log;
    thresholds_log["mode"] = c.derive_thresholds ? "derive" : "fixed";
    if (c.derive_thresholds) {
        if (peak_polarity.size() >= 3) {
            const auto derived = events::derive_thresholds(peak_polarity);
            d.thresholds = derived.thresholds;
            if (derived.degenerate) thresholds_log["warning"] = derived.warning;
        } else {
            thresholds_log["warning"] = "fewer than 3 peak polarities; using the fixed thresholds";
        }
    }
    thresholds_log["lower"] = d.thresholds.lower;
    thresholds_log["upper"] = d.thresholds.upper;

    for (std::size_t i = 0; i < series.size(); ++i) {
        if (!found[i].skipped.empty()) continue;
        const auto pol = core::compute_polarity(*series[i]);
        for (auto& e : events::assign_polarity(found[i].all, pol, d.thresholds)) d.all.push_back(std::move(e));
        for (auto& e : events::assign_polarity(found[i].non_ea, pol, d.thresholds)) d.non_ea.push_back(std::move(e));
    }

    // EA recall over EA dates that fall inside a ticker's tweet range.
    std::size_t in_range = 0, matched = 0;
    for (const auto& a : ea) {
        const auto it = tweets.find(a.ticker);
        if (it == tweets.end() || it->second.size() == 0) continue;
        if (a.date < it->second.dates().front() || it->second.dates().back() < a.date) continue;
        ++in_range;
        matched += std::any_of(d.all.begin(), d.all.end(), [&](const events::Event& e) {
            return e.ticker == a.ticker && std::llabs(days_between(a.date, e.date)) <= 1;
        });
    }
    const auto count = [](const std::vector<events::Event>& v, events::PolarityClass cls) {
        return std::count_if(v.begin(), v.end(), [&](const events::Event& e) { return e.polarity_class == cls; });
    };
    const auto class_counts = [&](const std::vector<events::Event>& v) {
        return ordered_json{{"total", v.size()},
                            {"negative", count(v, events::PolarityClass::Negative)},
                            {"neutral", count(v, events::PolarityClass::Neutral)},
                            {"positive", count(v, events::PolarityClass::Positive)}};
    };
    const auto ea_events = std::count_if(d.all.begin(), d.all.end(), [](const events::Event& e) { return e.is_ea; });
    d.log["thresholds"] = thresholds_log;
    d.log["all"] = class_counts(d.all);
    d.log["all"]["ea_tagged"] = ea_events;
    d.log["non_ea"] = class_counts(d.non_ea);
    d.log["ea_dates"] = {{"in_range", in_range},
                         {"matched", matched},
                         {"recall", in_range ? double(matched) / double(in_range) : 0.0}};
    d.log["skipped"] = skipped;
    return d;
}

std::vector<events::EaDate> ea_dates(const RunConfig& c) {
    if (c.ea_dates.empty()) return {};
    RunConfig::require_file(c.ea_dates, "ea_dates");
    return events::read_ea_dates(c.ea_dates);
}

void eval_rows(std::ostream& out, const std::string& prefix, const sentiment::EvalReport& r,
               const sentiment::CrossValidationReport* cv) {
    const char* names[] = {"negative", "neutral", "positive"};
    const auto row = [&](const std::string& name, double v, std::optional<double> ci) {
        out << prefix << name << ',' << format_double(v) << ',' << (ci ? format_double(*ci) : "") << '\n';
    };
    row("examples", double(r.examples), std::nullopt);
    row("accuracy", cv ? cv->accuracy.mean : r.accuracy, cv ? std::optional(cv->accuracy.half_width) : std::nullopt);
    row("accuracy_within_one", cv ? cv->accuracy_within_one.mean : r.accuracy_within_one,
        cv ? std::optional(cv->accuracy_within_one.half_width) : std::nullopt);
    row("f1_bar", cv ? cv->f1_bar.mean : r.f1_bar, cv ? std::optional(cv->f1_bar.half_width) : std::nullopt);
    for (std::size_t k = 0; k < 3; ++k) {
        row(std::string("precision_") + names[k], cv ? cv->precision[k].mean : r.precision[k],
            cv ? std::optional(cv->precision[k].half_width) : std::nullopt);
        row(std::string("recall_") + names[k], cv ? cv->recall[k].mean : r.recall[k],
            cv ? std::optional(cv->recall[k].half_width) : std::nullopt);
    }
    for (std::size_t t = 0; t < 3; ++t) {
        for (std::size_t p = 0; p < 3; ++p) {
            row(std::string("confusion_") + names[t] + "_" + names[p], double(r.confusion[t][p]), std::nullopt);
        }
    }
}

}  // namespace

CommandResult cmd_ingest(const RunConfig& c) {
    c.validate();
    RunConfig::require_file(c.prices, "prices");
    RunConfig::require_file(c.tweets, "tweets");
    if (!c.market.empty()) RunConfig::require_file(c.market, "market");
    const auto data = load_dataset(c.prices, c.tweets, c.market, c.market_ticker);
    CommandResult result;
    result.warnings = data.warnings;
    std::set<std::string> tickers;
    for (const auto& [k, v] : data.prices) tickers.insert(k);
    for (const auto& [k, v] : data.tweets) tickers.insert(k);
    core::TweetCounts total;
    Outputs out(c, result);
    out.text("ingest_summary.csv", [&](std::ostream& s) {
        s << "ticker,price_first,price_last,price_days,tweet_first,tweet_last,tweet_days,negative,neutral,positive,total\n";
        for (const auto& t : tickers) {
            const auto p = data.prices.find(t);
            const auto w = data.tweets.find(t);
            core::TweetCounts sum;
            if (w != data.tweets.end()) {
                for (const auto& x : w->second.counts()) sum += x;
            }
            total += sum;
            s << core::csv_escape(t) << ','
              << (p != data.prices.end() ? range_or_empty(p->second.dates(), true) : "") << ','
              << (p != data.prices.end() ? range_or_empty(p->second.dates(), false) : "") << ','
              << (p != data.prices.end() ? p->second.size() : 0) << ','
              << (w != data.tweets.end() ? range_or_empty(w->second.dates(), true) : "") << ','
              << (w != data.tweets.end() ? range_or_empty(w->second.dates(), false) : "") << ','
              << (w != data.tweets.end() ? w->second.size() : 0) << ',' << sum.negative << ',' << sum.neutral << ','
              << sum.positive << ',' << sum.total << '\n';
        }
        if (data.market) {
            s << core::csv_escape(data.market->ticker()) << ',' << range_or_empty(data.market->dates(), true) << ','
              << range_or_empty(data.market->dates(), false) << ',' << data.market->size() << ",,,0,0,0,0,0\n";
        }
        s << "TOTAL,,,,,,," << total.negative << ',' << total.neutral << ',' << total.positive << ',' << total.total
          << '\n';
    });
    if (!data.market) result.warnings.push_back("no market index series (ticker " + c.market_ticker + ")");
    result.summary = std::to_string(tickers.size()) + " tickers, " + std::to_string(total.total) + " tweets";
    return result;
}

CommandResult cmd_correlate(const RunConfig& c) {
    c.validate();
    const auto data = dataset(c, true);
    const auto tickers = analysable_tickers(data);
    struct Row {
        std::size_t n = 0;
        double rho = 0;
        std::string skipped;
    };
    const auto rows = core::parallel_map(tickers.size(), c.workers, [&](std::size_t i) {
        Row r;
        try {
            const auto panel = panel_for(data, tickers[i]);
            const auto pair = panel.polarity_and_returns(c.missing_polarity);
            r.n = pair.x.size();
            r.rho = stats::pearson(pair.x, pair.y);
        } catch (const ValidationError& e) {
            r.skipped = e.what();
        } catch (const AlignmentError& e) {
            r.skipped = e.what();
        }
        return r;
    });
    CommandResult result;
    result.warnings = data.warnings;
    ordered_json skipped = ordered_json::array();
    Outputs out(c, result);
    std::size_t written = 0;
    out.text("correlation.csv", [&](std::ostream& s) {
        s << "ticker,observations,rho\n";
        for (std::size_t i = 0; i < tickers.size(); ++i) {
            if (!rows[i].skipped.empty()) {
                skipped.push_back({{"ticker", tickers[i]}, {"reason", rows[i].skipped}});
                result.warnings.push_back(tickers[i] + " skipped: " + rows[i].skipped);
                continue;
            }
            ++written;
            s << core::csv_escape(tickers[i]) << ',' << rows[i].n << ',' << format_double(rows[i].rho) << '\n';
        }
    });
    out.json("correlate_log.json",
             {{"missing_polarity", c.missing_polarity == core::MissingPolarity::Zero ? "zero" : "drop"},
              {"tickers", tickers.size()},
              {"written", written},
              {"skipped", skipped}});
    result.summary = std::to_string(written) + " correlations, " + std::to_string(skipped.size()) + " skipped";
    return result;
}

CommandResult cmd_granger(const RunConfig& c) {
    c.validate();
    const auto data = dataset(c, true);
    const auto tickers = analysable_tickers(data);
    using Outcome = std::variant<std::string, stats::GrangerPipelineReport>;
    struct Pair {
        Outcome polarity, volume;
    };
    const auto run = [&](std::span<const double> x, std::span<const double> y) -> Outcome {
        try {
            return stats::granger_pipeline(x, y, c.granger);
        } catch (const stats::PipelineError& e) {
            return std::string(e.what());
        }
    };
    const auto results = core::parallel_map(tickers.size(), c.workers, [&](std::size_t i) {
        Pair p;
        try {
            const auto panel = panel_for(data, tickers[i]);
            const auto pr = panel.polarity_and_returns(c.missing_polarity);
            p.polarity = run(pr.x, pr.y);
            p.volume = run(panel.tweet_volume(), panel.abs_returns);
        } catch (const std::exception& e) {
            p.polarity = p.volume = std::string(e.what());
        }
        return p;
    });

    CommandResult result;
    result.warnings = data.warnings;
    ordered_json failures = ordered_json::array();
    std::array<int, 4> totals{};
    Outputs out(c, result);
    const auto flag = [](const Outcome& o, bool right) -> std::string {
        const auto* r = std::get_if<stats::GrangerPipelineReport>(&o);
        if (!r) return "";
        return (right ? r->x_causes_y : r->y_causes_x).report.reject ? "1" : "0";
    };
    out.text("granger.csv", [&](std::ostream& s) {
        s << "ticker,polarity_right,polarity_left,volume_right,volume_left\n";
        for (std::size_t i = 0; i < tickers.size(); ++i) {
            const auto& p = results[i];
            const std::string f[4] = {flag(p.polarity, true), flag(p.polarity, false), flag(p.volume, true),
                                      flag(p.volume, false)};
            for (int k = 0; k < 4; ++k) totals[std::size_t(k)] += f[k] == "1";
            s << core::csv_escape(tickers[i]) << ',' << f[0] << ',' << f[1] << ',' << f[2] << ',' << f[3] << '\n';
        }
        s << "TOTAL," << totals[0] << ',' << totals[1] << ',' << totals[2] << ',' << totals[3] << '\n';
    });
    out.text("granger_detail.csv", [&](std::ostream& s) {
        s << "ticker,pair,observations,order,x_differenced,y_differenced,f_right,p_right,right,f_left,p_left,left,"
             "ljung_box_p_x,ljung_box_p_y\n";
        for (std::size_t i = 0; i < tickers.size(); ++i) {
            for (const auto& [name, o] : {std::pair<const char*, const Outcome*>{"polarity_return", &results[i].polarity},
                                          {"volume_absreturn", &results[i].volume}}) {
                if (const auto* err = std::get_if<std::string>(o)) {
                    failures.push_back({{"ticker", tickers[i]}, {"pair", name}, {"error", *err}});
                    result.warnings.push_back(tickers[i] + " " + name + ": " + *err);
                    continue;
                }
                const auto& r = std::get<stats::GrangerPipelineReport>(*o);
                const auto lb = [&](std::size_t k) {
                    return k < r.ljung_box.size() && r.ljung_box[k].p_value ? format_double(*r.ljung_box[k].p_value)
                                                                            : std::string();
                };
                s << core::csv_escape(tickers[i]) << ',' << name << ',' << r.observations << ',' << r.order << ','
                  << r.x.differenced << ',' << r.y.differenced << ',' << format_double(r.x_causes_y.report.statistic)
                  << ',' << format_double(*r.x_causes_y.report.p_value) << ',' << r.x_causes_y.report.reject << ','
                  << format_double(r.y_causes_x.report.statistic) << ',' << format_double(*r.y_causes_x.report.p_value)
                  << ',' << r.y_causes_x.report.reject << ',' << lb(0) << ',' << lb(1) << '\n';
            }
        }
    });
    out.json("granger_log.json", {{"level", c.granger.level},
                                  {"max_order", c.granger.max_order},
                                  {"tickers", tickers.size()},
                                  {"failures", failures}});
    result.summary = "polarity->return " + std::to_string(totals[0]) + ", return->polarity " +
                     std::to_string(totals[1]) + ", volume->|return| " + std::to_string(totals[2]) +
                     ", |return|->volume " + std::to_string(totals[3]);
    return result;
}

CommandResult cmd_events(const RunConfig& c) {
    c.validate();
    RunConfig::require_file(c.tweets, "tweets");
    auto tweets = read_tweets(c.tweets);
    const auto ea = ea_dates(c);
    const auto d = detect(c, tweets.series, ea);
    CommandResult result;
    result.warnings = tweets.warnings;
    Outputs out(c, result);
    out.text("events_all.csv", [&](std::ostream& s) { events::write_events_csv(s, d.all); });
    out.text("events_non_ea.csv", [&](std::ostream& s) { events::write_events_csv(s, d.non_ea); });
    out.text("polarity_histogram.csv", [&](std::ostream& s) { events::write_polarity_histogram(s, d.all); });
    out.json("events_log.json", d.log);
    result.summary = std::to_string(d.all.size()) + " events (" + std::to_string(d.log["all"]["ea_tagged"].get<long>()) +
                     " EA), " + std::to_string(d.non_ea.size()) + " non-EA events";
    return result;
}

CommandResult cmd_study(const RunConfig& c) {
    c.validate();
    const auto data = dataset(c, c.events.empty());
    std::vector<events::Event> all, non_ea;
    ordered_json detection;
    if (!c.events.empty()) {
        RunConfig::require_file(c.events, "events");
        all = events::read_events_csv(c.events);
        for (const auto& e : all) {
            if (!e.is_ea) non_ea.push_back(e);
        }
        detection = {{"source", c.events.string()}};
    } else {
        auto d = detect(c, data.tweets, ea_dates(c));
        all = std::move(d.all);
        non_ea = std::move(d.non_ea);
        detection = d.log;
    }
    std::vector<study::ReturnPair> pairs;
    const auto market = core::compute_returns(*data.market);
    for (const auto& [name, p] : data.prices) pairs.emplace_back(core::compute_returns(p), market);

    CommandResult result;
    result.warnings = data.warnings;
    Outputs out(c, result);
    std::string summary;
    for (const auto& [mode, list, suffix] :
         {std::tuple{study::StudyMode::All, &all, "all"}, std::tuple{study::StudyMode::NonEa, &non_ea, "non_ea"}}) {
        const auto report = study::run_study(pairs, *list, c.windows, mode, c.workers);
        out.text(std::string("study_") + suffix + ".csv", [&](std::ostream& s) { study::write_study_table(s, report); });
        out.text(std::string("car_") + suffix + ".csv", [&](std::ostream& s) { study::write_car_curve(s, report); });
        std::ostringstream log;
        study::write_study_log(log, report);
        auto j = ordered_json::parse(log.str());
        j["detection"] = detection;
        out.json(std::string("study_log_") + suffix + ".json", j);
        if (!summary.empty()) summary += "; ";
        summary += std::string(suffix) + ": " + std::to_string(report.used.size()) + " events used, " +
                   std::to_string(report.dropped.size()) + " dropped";
    }
    result.summary = summary;
    return result;
}

CommandResult cmd_sentiment_train(const RunConfig& c) {
    c.validate();
    RunConfig::require_file(c.labeled, "labeled");
    const auto data = sentiment::read_labeled(c.labeled);
    auto options = c.sentiment;
    options.train.seed = c.seed;
    const auto model = sentiment::train_ordinal(data, options);
    CommandResult result;
    fs::create_directories(c.out);
    const fs::path path = c.model.empty() ? c.out / "model.json" : c.model;
    model.save(path, c.header());
    result.files.push_back(path);
    result.summary = "trained on " + std::to_string(data.size()) + " tweets, " +
                     std::to_string(model.vectorizer().space().size()) + " features";
    return result;
}

CommandResult cmd_sentiment_eval(const RunConfig& c) {
    c.validate();
    RunConfig::require_file(c.labeled, "labeled");
    const auto data = sentiment::read_labeled(c.labeled);
    std::vector<sentiment::Label> truth;
    for (const auto& t : data) truth.push_back(t.label);
    CommandResult result;
    Outputs out(c, result);
    std::optional<sentiment::CrossValidationReport> cv;
    sentiment::EvalReport report;
    std::string method;
    if (!c.predictions.empty()) {
        RunConfig::require_file(c.predictions, "predictions");
        const auto table = core::read_csv(c.predictions);
        const auto col = table.require_column("label");
        std::vector<sentiment::Label> predicted;
        for (const auto& row : table.rows) {
            try {
                predicted.push_back(sentiment::parse_label(core::trim(row.fields[col])));
            } catch (const ValidationError& e) {
                throw ParseError(table.source, row.line, e.what());
            }
        }
        if (predicted.size() != truth.size()) {
            throw ValidationError("predictions file has " + std::to_string(predicted.size()) +
                                  " rows but the labeled file has " + std::to_string(truth.size()));
        }
        report = sentiment::evaluate(predicted, truth);
        method = "predictions";
    } else if (!c.model.empty()) {
        RunConfig::require_file(c.model, "model");
        const auto model = sentiment::OrdinalModel::load(c.model);
        std::vector<sentiment::Label> predicted;
        for (const auto& t : data) predicted.push_back(model.predict(t.text));
        report = sentiment::evaluate(predicted, truth);
        method = "model";
    } else {
        auto options = c.sentiment;
        options.train.seed = c.seed;
        cv = sentiment::cross_validate(data, c.folds, c.seed, options, c.workers);
        report = cv->pooled;
        result.warnings = cv->warnings;
        method = std::to_string(c.folds) + "-fold cross-validation";
    }
    const bool doubly = !data.empty() && std::all_of(data.begin(), data.end(), [](const auto& t) { return t.second_label.has_value(); });
    out.text("sentiment_eval.csv", [&](std::ostream& s) {
        s << "measure,value,ci_half_width\n";
        eval_rows(s, "", report, cv ? &*cv : nullptr);
        if (doubly) eval_rows(s, "agreement_", sentiment::agreement(data), nullptr);
    });
    const double acc = cv ? cv->accuracy.mean : report.accuracy;
    result.summary = method + ": accuracy " + format_double(acc) + ", accuracy+-1 " +
                     format_double(cv ? cv->accuracy_within_one.mean : report.accuracy_within_one) + ", F1bar " +
                     format_double(cv ? cv->f1_bar.mean : report.f1_bar);
    return result;
}

CommandResult cmd_sentiment_predict(const RunConfig& c) {
    c.validate();
    RunConfig::require_file(c.model, "model");
    const auto model = sentiment::OrdinalModel::load(c.model);
    CommandResult result;
    if (c.input.empty()) {
        result.summary = std::string(sentiment::to_string(model.predict(c.text)));
        return result;
    }
    RunConfig::require_file(c.input, "input");
    const auto table = core::read_csv(c.input);
    const auto col = table.require_column("text");
    Outputs out(c, result);
    std::array<std::size_t, 3> counts{};
    out.text("predictions.csv", [&](std::ostream& s) {
        s << "text,label\n";
        for (const auto& row : table.rows) {
            const auto label = model.predict(row.fields[col]);
            ++counts[std::size_t(sentiment::label_index(label))];
            s << core::csv_escape(row.fields[col]) << ',' << sentiment::to_int(label) << '\n';
        }
    });
    result.summary = std::to_string(table.rows.size()) + " predictions: " + std::to_string(counts[0]) + " negative, " +
                     std::to_string(counts[1]) + " neutral, " + std::to_string(counts[2]) + " positive";
    return result;
}

std::string error_json(const std::exception& e) {
    ordered_json err;
    std::string type = "Error";
    if (dynamic_cast<const ParseError*>(&e)) {
        type = "ParseError";
    } else if (dynamic_cast<const DegenerateInputError*>(&e)) {
        type = "DegenerateInputError";
    } else if (dynamic_cast<const EmptyInputError*>(&e)) {
        type = "EmptyInputError";
    } else if (dynamic_cast<const ValidationError*>(&e)) {
        type = "ValidationError";
    } else if (dynamic_cast<const AlignmentError*>(&e)) {
        type = "AlignmentError";
    } else if (dynamic_cast<const SingularMatrixError*>(&e)) {
        type = "SingularMatrixError";
    } else if (dynamic_cast<const stats::PipelineError*>(&e)) {
        type = "PipelineError";
    } else if (dynamic_cast<const StateError*>(&e)) {
        type = "StateError";
    } else if (dynamic_cast<const BoundaryError*>(&e)) {
        type = "BoundaryError";
    } else if (dynamic_cast<const fs::filesystem_error*>(&e)) {
        type = "FilesystemError";
    }
    err["type"] = type;
    err["message"] = e.what();
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
        err["file"] = p->file();
        err["line"] = p->line();
    }
    return ordered_json{{"error", err}}.dump();
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 4;
    if (dynamic_cast<const ValidationError*>(&e)) return 3;
    if (dynamic_cast<const AlignmentError*>(&e) || dynamic_cast<const SingularMatrixError*>(&e) ||
        dynamic_cast<const stats::PipelineError*>(&e)) {
        return 5;
    }
    return 1;
}

}  // namespace tweetmarket::cli
