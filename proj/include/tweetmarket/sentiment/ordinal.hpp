#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tweetmarket/sentiment/label.hpp"
#include "tweetmarket/sentiment/linear_classifier.hpp"
#include "tweetmarket/sentiment/preprocess.hpp"
#include "tweetmarket/sentiment/tfidf.hpp"

namespace tweetmarket::sentiment {

struct LabeledTweet {
    std::string text;
    Label label = Label::Neutral;
    std::optional<Label> second_label;
};

/// Combines the two binary votes: A alone -> positive, B alone -> negative,
/// both or neither -> neutral.
Label combine_votes(bool positive_fires, bool negative_fires);

/// Two binary classifiers on a shared TF-IDF space:
///   A: positive vs negative-or-neutral, B: negative vs positive-or-neutral.
class OrdinalModel {
public:
    OrdinalModel(TfidfVectorizer vectorizer, LinearClassifier positive, LinearClassifier negative);

    Label predict(std::string_view text) const;
    Label predict_tokens(const std::vector<std::string>& tokens) const;

    const TfidfVectorizer& vectorizer() const { return vectorizer_; }
    const LinearClassifier& positive_classifier() const { return positive_; }
    const LinearClassifier& negative_classifier() const { return negative_; }

    /// JSON with keys [generated_by,] format, preprocessing, normalize, documents, vocabulary,
    /// document_frequency, positive {weights, bias}, negative {weights, bias}.
    void save(const std::filesystem::path& path, const std::string& generated_by = {}) const;
    static OrdinalModel load(const std::filesystem::path& path);

private:
    TfidfVectorizer vectorizer_;
    LinearClassifier positive_;
    LinearClassifier negative_;
};

struct OrdinalOptions {
    TrainOptions train;
    bool normalize = false;  // L2-normalize TF-IDF vectors
};

/// Throws ValidationError when fewer than two classes are present or both extreme
/// classes are empty.
OrdinalModel train_ordinal(const std::vector<LabeledTweet>& data, const OrdinalOptions& options = {});

}  // namespace tweetmarket::sentiment
