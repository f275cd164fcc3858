#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tweetmarket::sentiment {

/// Version tag stored with saved models.
inline constexpr std::string_view kPreprocessVersion = "tm-pre-1";

using Lemmatizer = std::function<std::string(std::string_view)>;

/// Normalizes a tweet into tokens:
///  1. removes URLs (`http://`, `https://`, `www.` up to the next whitespace),
///     cash-tags (`$` followed by letters, e.g. `$NKE`, `$BRK.B`) and mentions (`@` followed by [A-Za-z0-9_]);
///  2. lowercases ASCII letters;
///  3. collapses runs of three or more identical letters to two ("coooool" -> "cool");
///  4. splits into tokens: maximal runs of [a-z0-9'] and non-ASCII bytes; apostrophes are
///     trimmed from token edges and tokens left empty are dropped;
///  5. applies the lemmatizer to every token (identity when empty).
/// Stop words are kept.
std::vector<std::string> preprocess(std::string_view text, const Lemmatizer& lemmatizer = {});

}  // namespace tweetmarket::sentiment
