#pragma once

namespace d2d {

inline constexpr const char* kLibraryName = "d2dprice";
inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace d2d
