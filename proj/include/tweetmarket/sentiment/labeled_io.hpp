#pragma once

#include <filesystem>
#include <vector>

#include "tweetmarket/sentiment/ordinal.hpp"

namespace tweetmarket::sentiment {

/// `text,label[,label2]` with labels -1/0/1 (or negative/neutral/positive).
/// Rows whose text is blank raise ParseError.
std::vector<LabeledTweet> read_labeled(const std::filesystem::path& path);

}  // namespace tweetmarket::sentiment
