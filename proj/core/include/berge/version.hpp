#pragma once

namespace berge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace berge
