#pragma once

// Exact cross-validation at the Picard parameters (0,0,0,4): the monomial
// semiconjugacy with (C*)^2, eigenvalue identities at the Cayley singular
// points, and the hyperbolic-locus confinement check.

#include "cubics/params.hpp"
#include "cubics/sl2.hpp"
#include "cubics/types.hpp"
#include "cubics/word.hpp"

namespace cubics {

struct TorusPoint {
  cplx u, v;
};

// Phi(u,v) = (-u - 1/u, -v - 1/v, -u/v - v/u), lands on S_{0,0,0,4}
C3 phi(const TorusPoint& t);  // throws ZeroCoordinate

// eta_M(u,v) = (u^m11 v^m12, u^m21 v^m22)
TorusPoint eta(const Mat2& m, const TorusPoint& t);

// max normalized residual of Phi(eta_M(u,v)) - w(Phi(u,v)) over samples with
// 0.2 <= |u|, |v| <= 5 (deterministic sampling from the seed)
double verify_semiconjugacy(const Word& w, int samples, std::uint64_t seed = 1);

inline const std::array<C3, 4> kCayleyPoints = {
    C3{-2.0, -2.0, -2.0}, C3{-2.0, 2.0, 2.0}, C3{2.0, -2.0, 2.0}, C3{2.0, 2.0, -2.0}};

// numeric eigenvalues of the 3x3 Jacobian of the word map at a Cayley point,
// sorted to match {1, mu^2, mu^-2} with mu the eigenvalues of to_sl2(w)
std::array<cplx, 3> sing_pt_eigenvalues(const Word& w, const C3& p);

struct IntMat3 {
  bigint e[3][3];
};

// exact integer Jacobian of the word map at an integer point (Picard
// parameters are integers, so the chain rule stays in Z)
IntMat3 exact_picard_jacobian(const Word& w, bigint x, bigint y, bigint z);

// the exact identities at p = (-2,-2,-2):
//   n11 = m11^2 + m11 m12, n22 = m22^2 + m22 m21,
//   n33 = (m11 - m21)(m22 - m12), and
//   n11 + n22 + n33 = m11^2 + m22^2 + 2 m12 m21 + 1
bool check_exact_jacobian_identities(const Word& w);

struct HyperbolicLocusReport {
  int fixed_points_found = 0;
  bool all_in_box = true;      // [-2,2]^3 + 1e-6
  bool all_saddles = true;
  bool torus_lift_ok = true;   // lifted (u,v) found on the unit torus
  bool moduli_match = true;    // restricted eigenvalue moduli ~ |mu|^{+-1}
  std::vector<C3> outliers;
};

// throws OutlierFound if a fixed point escapes the box (would falsify the
// confinement theorem; indicates a solver or transcription bug)
HyperbolicLocusReport hyperbolic_locus_check(const Word& w);

}  // namespace cubics
