#pragma once

namespace eraskit {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace eraskit
