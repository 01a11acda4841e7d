#pragma once

namespace litbench {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace litbench
