#pragma once

namespace addspan {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace addspan
