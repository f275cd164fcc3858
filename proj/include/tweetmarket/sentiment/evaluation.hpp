#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tweetmarket/sentiment/label.hpp"
#include "tweetmarket/sentiment/ordinal.hpp"

namespace tweetmarket::sentiment {

struct EvalReport {
    std::size_t examples = 0;
    /// confusion[true][predicted], indices from label_index().
    std::array<std::array<std::size_t, 3>, 3> confusion{};
    double accuracy = 0.0;
    /// 1 - (negative predicted positive + positive predicted negative) / examples.
    double accuracy_within_one = 0.0;
    /// Mean of the negative and positive F1.
    double f1_bar = 0.0;
    std::array<double, 3> precision{};
    std::array<double, 3> recall{};
    std::array<double, 3> f1{};
};

/// Precision, recall and F1 with a zero denominator are reported as 0.
EvalReport evaluate(std::span<const Label> predicted, std::span<const Label> truth);

/// Inter-annotator agreement: the first annotation is the reference and the second is
/// scored against it. Every tweet must carry a second label.
EvalReport agreement(std::span<const LabeledTweet> doubly_labeled);

struct Interval {
    double mean = 0.0;
    double half_width = 0.0;  // 1.96 * sd / sqrt(folds)
};

struct CrossValidationReport {
    std::vector<EvalReport> folds;
    EvalReport pooled;  // predictions of all folds scored together
    Interval accuracy, accuracy_within_one, f1_bar;
    std::array<Interval, 3> precision, recall;
    std::vector<std::string> warnings;
};

/// Seeded random partition into `folds` parts of near-equal size; each part is scored
/// by a model trained on the rest. A training split that cannot be fitted (for example a
/// single class) falls back to predicting its most frequent label and adds a warning.
/// Folds run on `workers` threads; the result does not depend on the count.
CrossValidationReport cross_validate(const std::vector<LabeledTweet>& data, std::size_t folds,
                                     std::uint64_t seed, const OrdinalOptions& options = {},
                                     std::size_t workers = 1);

}  // namespace tweetmarket::sentiment
