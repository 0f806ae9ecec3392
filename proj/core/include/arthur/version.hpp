#pragma once

namespace arthur {
inline constexpr const char* kEngineVersion = "0.1.0";
}
