#pragma once

namespace tweetmarket {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace tweetmarket
