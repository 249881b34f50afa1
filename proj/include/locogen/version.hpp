#pragma once

namespace locogen {

inline constexpr const char* engine_name = "locogen";
inline constexpr const char* engine_version = "0.1.0";

}  // namespace locogen
