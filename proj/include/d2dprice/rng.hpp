#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace d2d {

// Seeded random source for network sampling and tests.
//
// std::mt19937_64 pins the raw bit stream across platforms, but the standard
// library distributions do not, so the float mappings are spelled out here.
// Metadata sidecars record this scheme as "d2dprice-v1".
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]. Used where the lower endpoint must be excluded.
  double uniform01_high() { return 1.0 - uniform01(); }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unit-mean exponential, strictly positive.
  double exponential() {
    double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    return -std::log(u);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline constexpr const char* kRngFamily = "std::mt19937_64";
inline constexpr const char* kRngScheme = "d2dprice-v1";

}  // namespace d2d
