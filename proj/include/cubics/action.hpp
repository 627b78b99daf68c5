#pragma once

// Numeric application of letters and words to points of C^3, with Jacobians
// and tangent-restricted derivatives. Evaluation is templated over the
// complex scalar: std::complex<double> (default), std::complex<long double>
// (extended range for the escape cascade), or cdd (double-double).

#include <Eigen/Dense>
#include <optional>

#include "cubics/dd.hpp"
#include "cubics/params.hpp"
#include "cubics/types.hpp"
#include "cubics/word.hpp"

namespace cubics {

template <class S>
struct P3 {
  S x{}, y{}, z{};
};

template <class S>
struct ScalarOf {
  static S from(cplx c) { return S(c); }
};
template <>
struct ScalarOf<cdd> {
  static cdd from(cplx c) { return cdd(c); }
};

template <class S>
struct ParamsT {
  S A, B, C, D;
  static ParamsT from(const Params& p) {
    return {ScalarOf<S>::from(p.A), ScalarOf<S>::from(p.B), ScalarOf<S>::from(p.C),
            ScalarOf<S>::from(p.D)};
  }
};

// s_x(x,y,z) = (-x - yz + A, y, z), cyclically for s_y, s_z
template <class S>
P3<S> apply_letter_t(const ParamsT<S>& p, Axis l, const P3<S>& q) {
  switch (l) {
    case Axis::X: return {-q.x - q.y * q.z + p.A, q.y, q.z};
    case Axis::Y: return {q.x, -q.y - q.x * q.z + p.B, q.z};
    case Axis::Z: return {q.x, q.y, -q.z - q.x * q.y + p.C};
  }
  return q;
}

// right-most letter applied first
template <class S>
P3<S> apply_word_t(const ParamsT<S>& p, const Word& w, P3<S> q) {
  const auto& l = w.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) q = apply_letter_t(p, *it, q);
  return q;
}

C3 apply_letter(const Params& p, Axis l, const C3& q);
C3 apply_word(const Params& p, const Word& w, const C3& q);

struct OrbitStep {
  int step;
  Axis letter;
  C3 point;
  double residual;
};

struct CheckedOrbit {
  C3 point;
  bool escaped;         // some coordinate modulus exceeded the cutoff
  int steps_done;       // letters applied before stopping
  std::vector<OrbitStep> trace;
};

inline constexpr double kEscapeCutoff = 1e150;

CheckedOrbit apply_word_checked(const Params& p, const Word& w, const C3& q,
                                bool keep_trace = false);

struct Jet {
  C3 value;
  Eigen::Matrix3cd jacobian;
};

Eigen::Matrix3cd letter_jacobian(Axis l, const C3& q);
Jet word_jet(const Params& p, const Word& w, const C3& q);

struct RestrictedDerivative {
  Eigen::Matrix2cd matrix2;
  std::array<cplx, 2> eigenvalues;
  bool at_singular_point;  // gradient vanished; eigenvalues from the full
                           // Jacobian with the trivial eigenvalue 1 removed
};

// Requires q on-surface and fixed by w (within tol); at smooth points the
// Jacobian is compressed to an orthonormal basis of the tangent plane.
RestrictedDerivative restricted_derivative(const Params& p, const Word& w, const C3& q,
                                           double tol = 1e-8);

// pullback ratio (w^* of the area form) / (area form) at a smooth point;
// -1 for a single involution letter, +1 for Gamma words
cplx pullback_volume_ratio(const Params& p, const Word& w, const C3& q);

}  // namespace cubics
