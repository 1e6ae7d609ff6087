#pragma once

namespace kp {
inline constexpr const char* kVersion = "kplab 1.0.0";
}
