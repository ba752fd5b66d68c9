#pragma once

namespace bosonic {

inline constexpr const char* tool_name = "bosonic-tradeoff";
inline constexpr const char* tool_version = "0.1.0";

}  // namespace bosonic
