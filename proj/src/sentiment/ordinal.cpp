#include "tweetmarket/sentiment/ordinal.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::sentiment {

Label parse_label(std::string_view s) {
    if (s == "-1" || s == "negative") return Label::Negative;
    if (s == "0" || s == "neutral") return Label::Neutral;
    if (s == "1" || s == "+1" || s == "positive") return Label::Positive;
    throw ValidationError("unknown sentiment label '" + std::string(s) + "'");
}

std::string_view to_string(Label label) {
    switch (label) {
        case Label::Negative: return "negative";
        case Label::Neutral: return "neutral";
        case Label::Positive: return "positive";
    }
    return "neutral";
}

int to_int(Label label) { return static_cast<int>(label); }

Label combine_votes(bool positive_fires, bool negative_fires) {
    if (positive_fires && !negative_fires) return Label::Positive;
    if (negative_fires && !positive_fires) return Label::Negative;
    return Label::Neutral;
}

OrdinalModel::OrdinalModel(TfidfVectorizer vectorizer, LinearClassifier positive, LinearClassifier negative)
    : vectorizer_(std::move(vectorizer)), positive_(std::move(positive)), negative_(std::move(negative)) {
    const auto dim = vectorizer_.space().size();
    if (positive_.weights.size() != dim || negative_.weights.size() != dim) {
        throw ValidationError("classifier weights do not match the vocabulary size");
    }
}

Label OrdinalModel::predict_tokens(const std::vector<std::string>& tokens) const {
    const auto x = vectorizer_.transform(tokens);
    return combine_votes(positive_.fires(x), negative_.fires(x));
}

Label OrdinalModel::predict(std::string_view text) const { return predict_tokens(preprocess(text)); }

namespace {

nlohmann::json classifier_json(const LinearClassifier& c) {
    return {{"weights", c.weights}, {"bias", c.bias}};
}

LinearClassifier classifier_from(const nlohmann::json& j) {
    LinearClassifier c;
    c.weights = j.at("weights").get<std::vector<double>>();
    c.bias = j.at("bias").get<double>();
    return c;
}

}  // namespace

void OrdinalModel::save(const std::filesystem::path& path, const std::string& generated_by) const {
    const auto& space = vectorizer_.space();
    nlohmann::ordered_json j;
    if (!generated_by.empty()) j["generated_by"] = generated_by;
    j["format"] = "tweetmarket-ordinal-model";
    j["preprocessing"] = std::string(kPreprocessVersion);
    j["normalize"] = space.normalize;
    j["documents"] = space.documents;
    j["vocabulary"] = space.terms;
    j["document_frequency"] = space.document_frequency;
    j["positive"] = classifier_json(positive_);
    j["negative"] = classifier_json(negative_);
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write model to " + path.string());
    out << j.dump() << '\n';
}

OrdinalModel OrdinalModel::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open model " + path.string());
    try {
        const auto j = nlohmann::json::parse(in);
        if (j.at("format") != "tweetmarket-ordinal-model") throw ValidationError("not a tweetmarket model file");
        if (j.at("preprocessing") != kPreprocessVersion) {
            throw ValidationError("model was built with preprocessing " + j.at("preprocessing").get<std::string>());
        }
        FeatureSpace space;
        space.normalize = j.at("normalize").get<bool>();
        space.documents = j.at("documents").get<std::uint32_t>();
        space.terms = j.at("vocabulary").get<std::vector<std::string>>();
        space.document_frequency = j.at("document_frequency").get<std::vector<std::uint32_t>>();
        return OrdinalModel(TfidfVectorizer::from_space(std::move(space)), classifier_from(j.at("positive")),
                            classifier_from(j.at("negative")));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("malformed model file " + path.string() + ": " + e.what());
    }
}

OrdinalModel train_ordinal(const std::vector<LabeledTweet>& data, const OrdinalOptions& options) {
    std::array<std::size_t, 3> counts{};
    for (const auto& t : data) ++counts[std::size_t(label_index(t.label))];
    const auto present = std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; });
    if (present < 2) throw ValidationError("training data needs at least two sentiment classes");
    if (counts[0] == 0 && counts[2] == 0) throw ValidationError("training data has no negative or positive examples");

    std::vector<std::vector<std::string>> docs;
    docs.reserve(data.size());
    for (const auto& t : data) docs.push_back(preprocess(t.text));
    TfidfVectorizer vectorizer(options.normalize);
    vectorizer.fit(docs);
    std::vector<SparseVector> x;
    x.reserve(docs.size());
    for (const auto& d : docs) x.push_back(vectorizer.transform(d));
    std::vector<bool> is_pos, is_neg;
    for (const auto& t : data) {
        is_pos.push_back(t.label == Label::Positive);
        is_neg.push_back(t.label == Label::Negative);
    }
    const auto dim = vectorizer.space().size();
    auto a = train_linear(x, is_pos, dim, options.train);
    auto b = train_linear(x, is_neg, dim, options.train);
    return OrdinalModel(std::move(vectorizer), std::move(a), std::move(b));
}

}  // namespace tweetmarket::sentiment
