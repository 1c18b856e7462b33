#pragma once

namespace satspec {

inline constexpr const char kVersion[] = "0.1.0";

}  // namespace satspec
