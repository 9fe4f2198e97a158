#pragma once

namespace taquin {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace taquin
