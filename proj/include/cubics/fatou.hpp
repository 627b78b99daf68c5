#pragma once

// Constructive Fatou certificates: the escape ball, the per-letter
// modulus-monotonicity verifier, BQ-style orbit tests, and the cubic root
// seeds for the punctured-torus family.

#include "cubics/params.hpp"
#include "cubics/types.hpp"
#include "cubics/word.hpp"

namespace cubics {

struct FatouBall {
  double r;        // max(|A|, |B|, |C|)
  double R;        // > 2 + sqrt(r); center (u,u,u) with |u| = R
  double epsilon;  // min{R - (2+sqrt r), R + 1 - sqrt(4R + r + 1)}
};

FatouBall fatou_ball(cplx A, cplx B, cplx C, double R);  // throws RadiusTooSmall

enum class CertStatus { Certified, FailedWithWitness, Inconclusive };

struct FatouCertificate {
  CertStatus status = CertStatus::Inconclusive;
  Word witness_word;                        // first violating word, if any
  int depth = 0;
  std::vector<double> min_modulus_by_depth; // per-depth min over the BFS layer
};

// BFS over all reduced words of length <= depth from q. Certified means:
// along every path each applied letter does not decrease the modulus of its
// target coordinate, and the minimum coordinate modulus stays > 2 + sqrt(r).
FatouCertificate certify_monotone_escape(const Params& p, const C3& q, int depth,
                                         Exec exec = Exec::Parallel);

struct BQReport {
  bool condition1 = true;          // no explored coordinate in [-2, 2]
  long condition2_violations = 0;  // images not in (C \ closed disk_2)^3
  int depth = 0;
  bool radius2_heuristic = false;  // radius 2 is only exact for (A,B,C)=(0,0,0)
};

BQReport bq_orbit_test(const Params& p, const C3& q, int depth);

// a root of u^3 + 3u^2 = D with |u| > 2; throws NoEscapeRoot iff D = 4
cplx cubic_escape_root(cplx D);

// real root u0 < -(2 + sqrt(2a+4)) of
// p_a(u) = u^3 + 3u^2 - 3(2a+4)u + a^2 + 8a + 8
double dm_fatou_root(double a);

}  // namespace cubics
