#pragma once

// Dynamics of g_x (and cyclic analogues) on the fibers x = c: Moebius-type
// classification, rotation numbers, and the quantitative return search.

#include <Eigen/Dense>
#include <optional>

#include "cubics/params.hpp"
#include "cubics/word.hpp"

namespace cubics {

enum class FiberKind { Elliptic, Loxodromic, ParabolicFiber };

struct FiberClassification {
  FiberKind kind;
  std::array<cplx, 2> multipliers;   // reciprocal pair
  std::optional<double> rotation;    // theta in (0,1) with c = 2cos(theta*pi)
};

// Linear part of g_axis on the fiber {axis coordinate = c}, in the cyclic
// coordinate pair ((y,z) for X, (z,x) for Y, (x,y) for Z):
// [[-1, -c], [c, c^2 - 1]]; trace c^2 - 2, det 1.
Eigen::Matrix2cd fiber_linear_part(const Params& p, Axis axis, cplx c);

FiberClassification classify_fiber(const Params& p, Axis axis, cplx c);

struct TubeSpec {
  Axis axis;
  cplx center;
  double radius;
};

struct Region2 {  // open box around (y,z) (cyclic pair of the tube axis)
  cplx c1, c2;
  double half_width1, half_width2;
  bool contains(cplx u1, cplx u2) const {
    return std::abs(u1 - c1) < half_width1 && std::abs(u2 - c2) < half_width2;
  }
};

// smallest |n| <= n_max with g_axis^n(q) in the target region, search order
// 0, +1, -1, +2, ...; throws EscapedTube on conserved-coordinate drift
std::optional<int> find_return_iterate(const Params& p, const TubeSpec& tube, const C3& q,
                                       const Region2& target, int n_max);

// conservative bad-set predicate: c within tol of a fiber degeneracy
// (double root of the sampling quadratic at infinity / tangency with the
// plane at infinity), i.e. c = +-2 here
bool near_bad_fiber(const Params& p, Axis axis, cplx c, double tol = 1e-6);

}  // namespace cubics
