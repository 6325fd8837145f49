#pragma once

namespace zlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace zlab
