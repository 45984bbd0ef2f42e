#pragma once

namespace rsgap {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCxFormatVersion = "rsgap-cx-v1";

}  // namespace rsgap
