#pragma once

namespace torsionlab {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace torsionlab
