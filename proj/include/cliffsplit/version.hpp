#pragma once

#include <string_view>

namespace cliffsplit {

inline constexpr std::string_view kToolName = "cliffsplit";
inline constexpr std::string_view kVersion = "1.0.0";

}  // namespace cliffsplit
