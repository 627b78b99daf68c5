#pragma once

// Iterated-commutator contraction: budgets K(eps), level sets S(n), measured
// sup-deviations against the K/2^n budget, and the Markoff / DM seeds.

#include "cubics/params.hpp"
#include "cubics/types.hpp"
#include "cubics/word.hpp"

namespace cubics {

struct CascadeBudget {
  double epsilon;
  double K;  // epsilon / 32
};

CascadeBudget budget_for(double epsilon);

struct CommutatorLevel {
  int n = 0;
  std::vector<Word> elements;
  std::vector<double> measured_sup;  // filled by run_cascade
};

struct CascadeReport {
  CascadeBudget budget{};
  C3 center{};
  std::vector<CommutatorLevel> levels;
  bool decay_ok = false;
  bool dd_used = false;  // double-double evaluation engaged
};

// sup over low-discrepancy samples of the surface ball of |w(q) - q|;
// a lower bound on the true sup (sample count reported by the caller)
double measure_sup_deviation(const Params& p, const Word& w, const C3& center,
                             double radius, int samples, bool use_dd,
                             Exec exec = Exec::Parallel);

struct CommutatorBoundReport {
  bool ok = false;
  double d1 = 0, d2 = 0;   // seed deviations on the eps-ball
  double bound = 0;        // (2/tau) d1 d2
  double measured = 0;     // commutator deviation on the shrunken ball
};

// verifies sup|[f1,f2](z)-z| <= (2/tau) sup|f1-id| sup|f2-id| on the
// shrunken ball; throws HypothesisViolated if 4*max_dev + tau >= eps
CommutatorBoundReport commutator_bound_check(const Word& f1, const Word& f2,
                                             const Params& p, const C3& center,
                                             double eps, double tau, int samples);

// S(0) = {h_x^{+-1}, h_y^{+-1}} with h_x = g_x^2, h_y = g_y^2
CommutatorLevel seed_markoff();

struct DMSeed {
  int k = 0;
  CommutatorLevel level;       // {g_x^{+-k}, (g_y^-1 g_x^k g_y)^{+-1}}
  double eigen_return = 0;     // |lambda_1^k - 1|
  double matrix_return = 0;    // |(D_{p1} g_x)^k - Id| (Frobenius)
};

// minimal k <= cap with |(D_{p1} g_x)^k - Id| < tau; throws NoReturnFound
DMSeed seed_dm(double a, double tau, long cap = 1000000);

// throws SeedTooLoose when a level-0 deviation on B_eps(center) >= K
CascadeReport run_cascade(const CommutatorLevel& level0, const Params& p,
                          const CascadeBudget& budget, const C3& center, int n_max,
                          int samples, Exec exec = Exec::Parallel);

}  // namespace cubics
