#include "tweetmarket/sentiment/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "tweetmarket/core/error.hpp"
#include "tweetmarket/core/parallel.hpp"
#include "tweetmarket/stats/random.hpp"

namespace tweetmarket::sentiment {

namespace {

double ratio(std::size_t num, std::size_t den) { return den == 0 ? 0.0 : double(num) / double(den); }

void finish(EvalReport& r) {
    const auto& c = r.confusion;
    std::size_t correct = 0;
    for (std::size_t k = 0; k < 3; ++k) correct += c[k][k];
    r.accuracy = ratio(correct, r.examples);
    r.accuracy_within_one = r.examples == 0 ? 0.0 : 1.0 - ratio(c[0][2] + c[2][0], r.examples);
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t predicted = c[0][k] + c[1][k] + c[2][k];
        const std::size_t actual = c[k][0] + c[k][1] + c[k][2];
        r.precision[k] = ratio(c[k][k], predicted);
        r.recall[k] = ratio(c[k][k], actual);
        const double pr = r.precision[k] + r.recall[k];
        r.f1[k] = pr == 0 ? 0.0 : 2.0 * r.precision[k] * r.recall[k] / pr;
    }
    r.f1_bar = 0.5 * (r.f1[0] + r.f1[2]);
}

Interval interval(const std::vector<double>& v) {
    Interval out;
    const double k = double(v.size());
    for (double x : v) out.mean += x / k;
    if (v.size() < 2) return out;
    double ss = 0;
    for (double x : v) ss += (x - out.mean) * (x - out.mean);
    out.half_width = 1.96 * std::sqrt(ss / (k - 1)) / std::sqrt(k);
    return out;
}

}  // namespace

EvalReport evaluate(std::span<const Label> predicted, std::span<const Label> truth) {
    if (predicted.size() != truth.size()) throw ValidationError("prediction and label counts differ");
    if (truth.empty()) throw EmptyInputError("nothing to evaluate");
    EvalReport r;
    r.examples = truth.size();
    for (std::size_t i = 0; i < truth.size(); ++i) {
        ++r.confusion[std::size_t(label_index(truth[i]))][std::size_t(label_index(predicted[i]))];
    }
    finish(r);
    return r;
}

EvalReport agreement(std::span<const LabeledTweet> doubly_labeled) {
    std::vector<Label> first, second;
    for (const auto& t : doubly_labeled) {
        if (!t.second_label) throw ValidationError("agreement needs a second label on every tweet");
        first.push_back(t.label);
        second.push_back(*t.second_label);
    }
    return evaluate(second, first);
}

CrossValidationReport cross_validate(const std::vector<LabeledTweet>& data, std::size_t folds, std::uint64_t seed,
                                     const OrdinalOptions& options, std::size_t workers) {
    if (folds < 2) throw ValidationError("cross-validation needs at least 2 folds");
    if (data.size() < folds) throw ValidationError("fewer examples than folds");
    options.train.validate();

    std::vector<std::size_t> order(data.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    stats::Rng rng(seed);
    rng.shuffle(std::span(order));
    std::vector<std::size_t> fold_of(data.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) fold_of[order[pos]] = pos % folds;

    struct FoldResult {
        std::vector<std::size_t> test;
        std::vector<Label> predicted;
        std::string warning;
    };
    const auto results = core::parallel_map(folds, workers, [&](std::size_t f) {
        FoldResult out;
        std::vector<LabeledTweet> train;
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (fold_of[i] == f) {
                out.test.push_back(i);
            } else {
                train.push_back(data[i]);
            }
        }
        OrdinalOptions fold_options = options;
        fold_options.train.seed = stats::splitmix64(options.train.seed + f);
        try {
            const auto model = train_ordinal(train, fold_options);
            for (auto i : out.test) out.predicted.push_back(model.predict(data[i].text));
        } catch (const ValidationError& e) {
            std::array<std::size_t, 3> counts{};
            for (const auto& t : train) ++counts[std::size_t(label_index(t.label))];
            const auto best = std::size_t(std::max_element(counts.begin(), counts.end()) - counts.begin());
            const auto constant = static_cast<Label>(int(best) - 1);
            out.predicted.assign(out.test.size(), constant);
            out.warning = "fold " + std::to_string(f + 1) + ": " + e.what() + "; predicting " +
                          std::string(to_string(constant)) + " for every example";
        }
        return out;
    });

    CrossValidationReport report;
    std::vector<Label> all_pred(data.size()), all_true(data.size());
    std::vector<double> acc, acc1, f1b;
    std::array<std::vector<double>, 3> prec, rec;
    for (const auto& r : results) {
        std::vector<Label> truth;
        for (std::size_t k = 0; k < r.test.size(); ++k) {
            truth.push_back(data[r.test[k]].label);
            all_pred[r.test[k]] = r.predicted[k];
            all_true[r.test[k]] = data[r.test[k]].label;
        }
        const auto e = evaluate(r.predicted, truth);
        report.folds.push_back(e);
        acc.push_back(e.accuracy);
        acc1.push_back(e.accuracy_within_one);
        f1b.push_back(e.f1_bar);
        for (std::size_t k = 0; k < 3; ++k) {
            prec[k].push_back(e.precision[k]);
            rec[k].push_back(e.recall[k]);
        }
        if (!r.warning.empty()) report.warnings.push_back(r.warning);
    }
    report.pooled = evaluate(all_pred, all_true);
    report.accuracy = interval(acc);
    report.accuracy_within_one = interval(acc1);
    report.f1_bar = interval(f1b);
    for (std::size_t k = 0; k < 3; ++k) {
        report.precision[k] = interval(prec[k]);
        report.recall[k] = interval(rec[k]);
    }
    return report;
}

}  // namespace tweetmarket::sentiment
