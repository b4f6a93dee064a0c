#pragma once

namespace ps {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ps
