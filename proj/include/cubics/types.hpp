#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace cubics {

using cplx = std::complex<double>;

struct C3 {
  cplx x{}, y{}, z{};

  bool operator==(const C3&) const = default;
};

inline C3 operator+(const C3& a, const C3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline C3 operator-(const C3& a, const C3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

inline double norm2(const C3& a) {
  return std::norm(a.x) + std::norm(a.y) + std::norm(a.z);
}
inline double norm(const C3& a) { return std::sqrt(norm2(a)); }

enum class Exec { Serial, Parallel };

}  // namespace cubics
