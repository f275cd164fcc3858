#include "tweetmarket/sentiment/labeled_io.hpp"

#include "tweetmarket/core/csv.hpp"
#include "tweetmarket/core/error.hpp"

namespace tweetmarket::sentiment {

std::vector<LabeledTweet> read_labeled(const std::filesystem::path& path) {
    const auto t = core::read_csv(path);
    const auto c_text = t.require_column("text");
    const auto c_label = t.require_column("label");
    const auto c_label2 = t.column("label2");
    std::vector<LabeledTweet> out;
    for (const auto& row : t.rows) {
        LabeledTweet tweet;
        tweet.text = row.fields[c_text];
        if (core::trim(tweet.text).empty()) throw ParseError(t.source, row.line, "empty tweet text");
        try {
            tweet.label = parse_label(core::trim(row.fields[c_label]));
            if (c_label2 && !core::trim(row.fields[*c_label2]).empty()) {
                tweet.second_label = parse_label(core::trim(row.fields[*c_label2]));
            }
        } catch (const ValidationError& e) {
            throw ParseError(t.source, row.line, e.what());
        }
        out.push_back(std::move(tweet));
    }
    return out;
}

}  // namespace tweetmarket::sentiment
