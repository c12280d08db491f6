#pragma once

namespace cocite {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cocite
