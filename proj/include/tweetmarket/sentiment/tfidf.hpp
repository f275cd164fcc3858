#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tweetmarket::sentiment {

/// Sorted (index, value) pairs with unique indices.
struct SparseVector {
    std::vector<std::pair<std::uint32_t, double>> entries;

    double dot(const std::vector<double>& dense) const;
    double squared_norm() const;
    friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

/// Unigram and bigram ("first second") terms of a token list, in order of appearance.
std::vector<std::string> ngrams(const std::vector<std::string>& tokens);

struct FeatureSpace {
    std::vector<std::string> terms;               // index -> term, sorted
    std::map<std::string, std::uint32_t> index;   // term -> index
    std::vector<std::uint32_t> document_frequency;
    std::uint32_t documents = 0;
    bool normalize = false;

    /// ln((1 + N) / (1 + df)) + 1.
    double idf(std::uint32_t term) const;
    std::size_t size() const { return terms.size(); }
};

/// TF-IDF with raw term counts as TF and smoothed IDF; optional L2 normalization.
class TfidfVectorizer {
public:
    explicit TfidfVectorizer(bool normalize = false) : normalize_(normalize) {}

    /// Builds the vocabulary and document frequencies from tokenized documents.
    void fit(const std::vector<std::vector<std::string>>& documents);
    /// Throws StateError before fit(). Unknown terms are ignored.
    SparseVector transform(const std::vector<std::string>& tokens) const;
    bool fitted() const { return fitted_; }
    const FeatureSpace& space() const;
    static TfidfVectorizer from_space(FeatureSpace space);

private:
    bool normalize_ = false;
    bool fitted_ = false;
    FeatureSpace space_;
};

}  // namespace tweetmarket::sentiment
