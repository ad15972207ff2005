#pragma once

namespace sqos {

inline constexpr const char* version_string = "1.0.0";

} // namespace sqos
