#pragma once

namespace nearring {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nearring
