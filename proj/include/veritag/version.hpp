#pragma once

namespace veritag {

inline constexpr const char* version_string = "1.0.0";

// Bumped whenever the model-file payload layout changes incompatibly.
inline constexpr int model_format_version = 1;

}  // namespace veritag
