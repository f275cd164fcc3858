#pragma once

#include <string_view>

namespace tweetmarket::sentiment {

enum class Label { Negative = -1, Neutral = 0, Positive = 1 };

/// Accepts -1/0/1 and negative/neutral/positive. Throws ValidationError otherwise.
Label parse_label(std::string_view s);
std::string_view to_string(Label label);
/// -1, 0 or 1.
int to_int(Label label);
/// 0 for negative, 1 for neutral, 2 for positive.
inline int label_index(Label label) { return static_cast<int>(label) + 1; }

}  // namespace tweetmarket::sentiment
