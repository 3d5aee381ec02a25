#pragma once

namespace tna {

inline constexpr const char* kToolName = "tna";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace tna
