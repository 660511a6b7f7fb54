#pragma once

namespace ricefn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ricefn
