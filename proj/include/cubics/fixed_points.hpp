#pragma once

// Newton-based fixed-point finding on the surface, saddle/shear
// classification, common fixed points of the involutions, and the empirical
// good-parameter (Property P) screen.

#include "cubics/action.hpp"
#include "cubics/params.hpp"
#include "cubics/types.hpp"
#include "cubics/word.hpp"

namespace cubics {

enum class FPKind {
  Saddle,
  EllipticLike,
  ParabolicLike,
  Shear,
  SingularSurfacePoint,
  Borderline
};

struct FixedPointRecord {
  C3 point;
  Word word;
  RestrictedDerivative restricted;
  FPKind kind;
  double map_residual;      // |w(q) - q|
  double surface_residual;  // |defining polynomial|
};

struct NewtonStrategy {
  int grid_n = 20;            // real grid per axis over [-box, box]
  double box = 6.0;
  int random_complex = 200;   // extra complex seeds
  int torus_grid = 0;         // per-axis grid of Phi(T^2) seeds (Picard-like)
  std::uint64_t seed = 1;
  int max_iter = 50;
};

struct SeedStats {
  int total = 0;
  int converged = 0;
  int kept = 0;  // converged, on-surface, deduplicated
};

// Gauss-Newton on the stacked system [w(q) - q; surface residual]; the
// unconstrained fixed locus is a curve through the D-pencil, so the surface
// constraint is required for isolated zeros.
std::vector<FixedPointRecord> newton_fixed_points(const Params& p, const Word& w,
                                                  const NewtonStrategy& strategy = {},
                                                  SeedStats* stats = nullptr);

// common fixed points of s_x, s_y, s_z on the surface (the fixed-point
// equations are exactly gradient = 0)
std::vector<C3> common_fixed_points(const Params& p);

struct ShearCensus {
  int sampled = 0;
  int shear = 0;
  int exceptional = 0;  // within 1e-6 of y = B/2 or z = C/2
  std::vector<C3> exceptional_points;
  int anomalies = 0;    // neither shear nor exceptional (should stay 0)
};

// samples the fiber {x = c} (c in {0, sqrt 2} from the grid) and verifies
// each non-exceptional point is a shear fixed point of g_x^2 (c = 0) or
// g_x^4 (c = sqrt 2)
ShearCensus shear_census(const Params& p, Axis axis, double c, int samples,
                         std::uint64_t seed = 1);

// flags fixed points of cyclically reduced hyperbolic words whose restricted
// trace is within 1e-4 of [-2,2] (possible Property P failures nearby)
std::vector<FixedPointRecord> property_p_screen(const Params& p, int max_len,
                                                const NewtonStrategy& strategy = {});

FPKind classify_fixed_point(const RestrictedDerivative& rd);

}  // namespace cubics
