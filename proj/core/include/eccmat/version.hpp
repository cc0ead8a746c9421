#pragma once

namespace eccmat {

inline constexpr const char* version_string = "eccmat 0.1.0";

} // namespace eccmat
