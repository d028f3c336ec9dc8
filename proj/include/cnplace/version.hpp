#pragma once

namespace cnplace {

inline constexpr const char* kToolName = "cnplace";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace cnplace
