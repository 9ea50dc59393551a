#pragma once

namespace casipol {

inline constexpr const char* version = "0.1.0";

}  // namespace casipol
