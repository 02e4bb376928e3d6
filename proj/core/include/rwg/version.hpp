#pragma once

namespace rwg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rwg
