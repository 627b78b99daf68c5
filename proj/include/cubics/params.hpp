#pragma once

// Parameter families (A,B,C,D), trace/kappa conversions, surface membership,
// gradients, singular points, and the invariant area form on the cubic
// x^2 + y^2 + z^2 + xyz = Ax + By + Cz + D.

#include <vector>

#include "cubics/types.hpp"

namespace cubics {

struct Params {
  cplx A{}, B{}, C{}, D{};

  bool operator==(const Params&) const = default;
};

struct Traces {
  cplx a1{}, a2{}, a3{}, a4{};
};

struct Kappas {
  cplx k1{}, k2{}, k3{}, k4{};
};

Params from_traces(const Traces& t);
Params from_kappa(const Kappas& k);
Traces traces_from_kappa(const Kappas& k);

Params markoff_params();                 // (0,0,0,0)
Params picard_params();                  // (0,0,0,4)
Params torus_params(cplx D);             // (0,0,0,D)
Params dm_params(double a);              // (2a+4, 2a+4, 2a+4, -(a^2+8a+8))

cplx surface_residual(const Params& p, const C3& q);
C3 gradient(const Params& p, const C3& q);

// relative on-surface test: |residual| <= tol * (1 + |q|^3)
bool on_surface(const Params& p, const C3& q, double tol);

// both roots of z^2 + (xy - C) z + (x^2 + y^2 - Ax - By - D) = 0
std::array<cplx, 2> surface_z_roots(const Params& p, cplx x, cplx y);

// all common zeros of the residual and the gradient (finitely many)
std::vector<C3> singular_points(const Params& p);

bool is_singular_parameter(const Traces& t, double tol = 1e-12);

// roots via the companion matrix; coefficients ordered high degree first
std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs);

enum class Chart { XY = 0, YZ = 1, ZX = 2 };

// chart denominators: the partials f_z, f_x, f_y of the defining polynomial
cplx chart_denominator(const Params& p, Chart c, const C3& q);

// ratio of the area form evaluated in two charts via finite-difference
// implicit Jacobians; equals 1 at smooth on-surface points
cplx volume_form_ratio(const Params& p, const C3& q, Chart a, Chart b);

}  // namespace cubics
