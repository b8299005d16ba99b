#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace d2d {

/// Shortest decimal string that round-trips the value exactly.
inline std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace d2d
