#include "tweetmarket/sentiment/tfidf.hpp"

#include <cmath>
#include <set>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::sentiment {

double SparseVector::dot(const std::vector<double>& dense) const {
    double s = 0;
    for (const auto& [i, v] : entries) s += v * dense[i];
    return s;
}

double SparseVector::squared_norm() const {
    double s = 0;
    for (const auto& [i, v] : entries) s += v * v;
    return s;
}

std::vector<std::string> ngrams(const std::vector<std::string>& tokens) {
    std::vector<std::string> out(tokens);
    for (std::size_t i = 1; i < tokens.size(); ++i) out.push_back(tokens[i - 1] + ' ' + tokens[i]);
    return out;
}

double FeatureSpace::idf(std::uint32_t term) const {
    return std::log((1.0 + documents) / (1.0 + document_frequency[term])) + 1.0;
}

void TfidfVectorizer::fit(const std::vector<std::vector<std::string>>& documents) {
    std::map<std::string, std::uint32_t> df;
    for (const auto& doc : documents) {
        const auto grams = ngrams(doc);
        for (const auto& g : std::set<std::string>(grams.begin(), grams.end())) ++df[g];
    }
    FeatureSpace space;
    space.documents = static_cast<std::uint32_t>(documents.size());
    space.normalize = normalize_;
    for (const auto& [term, count] : df) {
        space.index.emplace(term, static_cast<std::uint32_t>(space.terms.size()));
        space.terms.push_back(term);
        space.document_frequency.push_back(count);
    }
    space_ = std::move(space);
    fitted_ = true;
}

SparseVector TfidfVectorizer::transform(const std::vector<std::string>& tokens) const {
    if (!fitted_) throw StateError("TF-IDF vectorizer used before fit");
    std::map<std::uint32_t, double> tf;
    for (const auto& g : ngrams(tokens)) {
        const auto it = space_.index.find(g);
        if (it != space_.index.end()) tf[it->second] += 1.0;
    }
    SparseVector v;
    for (const auto& [i, count] : tf) v.entries.emplace_back(i, count * space_.idf(i));
    if (space_.normalize) {
        const double norm = std::sqrt(v.squared_norm());
        if (norm > 0) {
            for (auto& e : v.entries) e.second /= norm;
        }
    }
    return v;
}

const FeatureSpace& TfidfVectorizer::space() const {
    if (!fitted_) throw StateError("TF-IDF vectorizer has no vocabulary before fit");
    return space_;
}

TfidfVectorizer TfidfVectorizer::from_space(FeatureSpace space) {
    if (space.terms.size() != space.document_frequency.size()) {
        throw ValidationError("vocabulary and document frequencies differ in length");
    }
    space.index.clear();
    for (std::uint32_t i = 0; i < space.terms.size(); ++i) {
        if (space.document_frequency[i] < 1) throw ValidationError("document frequency must be >= 1");
        if (!space.index.emplace(space.terms[i], i).second) {
            throw ValidationError("duplicate vocabulary term '" + space.terms[i] + "'");
        }
    }
    TfidfVectorizer v(space.normalize);
    v.space_ = std::move(space);
    v.fitted_ = true;
    return v;
}

}  // namespace tweetmarket::sentiment
