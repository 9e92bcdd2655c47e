#pragma once

namespace zsl {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace zsl
