#pragma once

namespace pcert {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pcert
