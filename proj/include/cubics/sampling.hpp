#pragma once

// Deterministic low-discrepancy sampling (Halton sequence) used by the
// sup-deviation estimators and the shear census.

#include <array>
#include <cstdint>

namespace cubics {

inline double halton(std::uint64_t index, std::uint32_t base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

// up to 6 coordinates in [0,1)
template <std::size_t N>
std::array<double, N> halton_point(std::uint64_t index) {
  static_assert(N <= 6);
  constexpr std::uint32_t bases[6] = {2, 3, 5, 7, 11, 13};
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = halton(index + 1, bases[i]);
  return out;
}

// splitmix64, used to derive per-sample offsets from a user seed
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace cubics
