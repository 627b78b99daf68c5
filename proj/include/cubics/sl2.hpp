#pragma once

// Exact image of Gamma in the congruence subgroup Gamma(2) of SL(2,Z).
// Entries grow exponentially in word length, hence arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>

#include "cubics/errors.hpp"
#include "cubics/word.hpp"

namespace cubics {

using bigint = boost::multiprecision::cpp_int;

struct Mat2 {
  bigint m11 = 1, m12 = 0, m21 = 0, m22 = 1;

  static Mat2 identity() { return {}; }

  Mat2 operator*(const Mat2& r) const {
    return {m11 * r.m11 + m12 * r.m21, m11 * r.m12 + m12 * r.m22,
            m21 * r.m11 + m22 * r.m21, m21 * r.m12 + m22 * r.m22};
  }

  bigint det() const { return m11 * m22 - m12 * m21; }
  bigint trace() const { return m11 + m22; }

  Mat2 inverse() const { return {m22, -m12, -m21, m11}; }  // valid for det = 1

  bool in_gamma2() const {
    return det() == 1 && m11 % 2 != 0 && m22 % 2 != 0 && m12 % 2 == 0 && m21 % 2 == 0;
  }

  bool operator==(const Mat2&) const = default;
};

inline const Mat2 kMatGx{1, 0, -2, 1};
inline const Mat2 kMatGy{1, 2, 0, 1};
inline const Mat2 kMatGz{1, -2, 2, -3};

// Homomorphism Gamma -> Gamma(2): consecutive letter pairs map to the
// generator matrices (a reduced even-length word always splits into the six
// two-letter blocks below).
inline Mat2 to_sl2(const Word& w) {
  const auto& l = w.letters();
  if (l.size() % 2 != 0) throw OddLengthWord("to_sl2: word not in Gamma");
  Mat2 out = Mat2::identity();
  for (std::size_t i = 0; i + 1 < l.size(); i += 2) {
    Axis u = l[i], v = l[i + 1];
    Mat2 m;
    if (u == Axis::Z && v == Axis::Y) m = kMatGx;
    else if (u == Axis::Y && v == Axis::Z) m = kMatGx.inverse();
    else if (u == Axis::X && v == Axis::Z) m = kMatGy;
    else if (u == Axis::Z && v == Axis::X) m = kMatGy.inverse();
    else if (u == Axis::Y && v == Axis::X) m = kMatGz;
    else m = kMatGz.inverse();  // (X, Y)
    out = out * m;
  }
  return out;
}

}  // namespace cubics
