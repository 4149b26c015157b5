#pragma once

namespace realchar {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr unsigned kCacheSchemaVersion = 1;
inline constexpr unsigned kReportSchemaVersion = 1;

}  // namespace realchar
