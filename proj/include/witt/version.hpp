#pragma once

namespace witt {

inline constexpr const char* kToolName = "witt";
inline constexpr const char* kVersion = "0.1.0";

} // namespace witt
