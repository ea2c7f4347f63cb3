#pragma once

namespace twistk {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace twistk
