#pragma once

namespace torusfs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace torusfs
