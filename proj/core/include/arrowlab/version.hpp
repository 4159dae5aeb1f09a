#pragma once

namespace arrowlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace arrowlab
