#pragma once

namespace wdp {
inline constexpr const char* kVersion = "1.0.0";
}
