#pragma once

namespace tridec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tridec
