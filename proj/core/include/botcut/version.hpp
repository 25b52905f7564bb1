#pragma once

namespace botcut {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace botcut
