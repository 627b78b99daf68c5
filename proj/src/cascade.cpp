#include "cubics/cascade.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "cubics/action.hpp"
#include "cubics/errors.hpp"
#include "cubics/sampling.hpp"

namespace cubics {

CascadeBudget budget_for(double epsilon) { return {epsilon, epsilon / 32.0}; }

namespace {

// surface point near center: complex (x, y) offsets from a Halton point,
// z from the fiber quadratic (root nearest center.z)
bool sample_surface_point(const Params& p, const C3& center, double radius,
                          std::uint64_t index, C3& out) {
  auto h = halton_point<4>(index);
  double rho = radius / 4.0;
  double r1 = rho * std::sqrt(h[0]), t1 = 2.0 * std::acos(-1.0) * h[1];
  double r2 = rho * std::sqrt(h[2]), t2 = 2.0 * std::acos(-1.0) * h[3];
  cplx x = center.x + cplx(r1 * std::cos(t1), r1 * std::sin(t1));
  cplx y = center.y + cplx(r2 * std::cos(t2), r2 * std::sin(t2));
  auto roots = surface_z_roots(p, x, y);
  cplx z = std::abs(roots[0] - center.z) < std::abs(roots[1] - center.z) ? roots[0]
                                                                         : roots[1];
  out = {x, y, z};
  return norm(out - center) <= radius;
}

double deviation_double(const Params& p, const Word& w, const C3& q) {
  C3 img = apply_word(p, w, q);
  return norm(img - q);
}

double deviation_dd(const Params& p, const Word& w, const C3& q) {
  ParamsT<cdd> pp = ParamsT<cdd>::from(p);
  P3<cdd> pt{cdd(q.x), cdd(q.y), cdd(q.z)};
  // re-polish the surface membership in double-double (two Newton steps on z)
  for (int i = 0; i < 2; ++i) {
    cdd f = pt.x * pt.x + pt.y * pt.y + pt.z * pt.z + pt.x * pt.y * pt.z -
            pp.A * pt.x - pp.B * pt.y - pp.C * pt.z - pp.D;
    cdd fz = cdd(dd(2.0)) * pt.z + pt.x * pt.y - pp.C;
    pt.z = pt.z - f / fz;
  }
  P3<cdd> img = apply_word_t<cdd>(pp, w, pt);
  dd d2 = norm_sq(img.x - pt.x) + norm_sq(img.y - pt.y) + norm_sq(img.z - pt.z);
  return to_double(sqrt(d2));
}

}  // namespace

double measure_sup_deviation(const Params& p, const Word& w, const C3& center,
                             double radius, int samples, bool use_dd, Exec exec) {
  double sup = 0.0;
  if (exec == Exec::Parallel) {
#pragma omp parallel for reduction(max : sup) schedule(static)
    for (int i = 0; i < samples; ++i) {
      C3 q;
      if (!sample_surface_point(p, center, radius, static_cast<std::uint64_t>(i), q))
        continue;
      double d = use_dd ? deviation_dd(p, w, q) : deviation_double(p, w, q);
      sup = std::max(sup, d);
    }
  } else {
    for (int i = 0; i < samples; ++i) {
      C3 q;
      if (!sample_surface_point(p, center, radius, static_cast<std::uint64_t>(i), q))
        continue;
      double d = use_dd ? deviation_dd(p, w, q) : deviation_double(p, w, q);
      sup = std::max(sup, d);
    }
  }
  return sup;
}

CommutatorBoundReport commutator_bound_check(const Word& f1, const Word& f2,
                                             const Params& p, const C3& center,
                                             double eps, double tau, int samples) {
  CommutatorBoundReport rep;
  rep.d1 = measure_sup_deviation(p, f1, center, eps, samples, false);
  rep.d2 = measure_sup_deviation(p, f2, center, eps, samples, false);
  double kd = std::max(rep.d1, rep.d2);
  if (4.0 * kd + tau >= eps)
    throw HypothesisViolated("commutator_bound_check: 4*max_dev + tau >= eps");
  double shrunk = eps - 4.0 * kd - tau;
  Word comm = commutator(f1, f2);
  rep.bound = 2.0 * rep.d1 * rep.d2 / tau;
  bool dd_needed = rep.bound < 1e-13;
  rep.measured = measure_sup_deviation(p, comm, center, shrunk, samples, dd_needed);
  rep.ok = rep.measured <= rep.bound * (1.0 + 1e-9) + 1e-25;
  return rep;
}

CommutatorLevel seed_markoff() {
  Word hx = word_gx().pow(2), hy = word_gy().pow(2);
  return {0, {hx, hy, hx.inverse(), hy.inverse()}, {}};
}

DMSeed seed_dm(double a, double tau, long cap) {
  DMSeed out;
  Params p = dm_params(a);
  C3 p1{a, 2.0, 2.0};
  Eigen::Matrix3cd m = word_jet(p, word_gx(), p1).jacobian;

  cplx lam1 = a * a / 2.0 - 1.0 + std::sqrt(cplx(a * a * a * a - 4.0 * a * a)) / 2.0;
  cplx lam_pow = 1.0;
  Eigen::Matrix3cd mk = Eigen::Matrix3cd::Identity();
  long k = 0;
  for (long i = 1; i <= cap; ++i) {
    mk = mk * m;
    lam_pow *= lam1;
    double fro = (mk - Eigen::Matrix3cd::Identity()).norm();
    if (fro < tau) {
      k = i;
      out.eigen_return = std::abs(lam_pow - 1.0);
      out.matrix_return = fro;
      break;
    }
  }
  if (k == 0) throw NoReturnFound("seed_dm: no k <= cap with |(Dg_x)^k - Id| < tau");
  out.k = static_cast<int>(k);

  Word f = word_gx().pow(out.k);
  Word h = word_gy().inverse() * f * word_gy();
  out.level = {0, {f, h, f.inverse(), h.inverse()}, {}};
  return out;
}

CascadeReport run_cascade(const CommutatorLevel& level0, const Params& p,
                          const CascadeBudget& budget, const C3& center, int n_max,
                          int samples, Exec exec) {
  CascadeReport rep;
  rep.budget = budget;
  rep.center = center;

  for (const Word& w : level0.elements) {
    double d = measure_sup_deviation(p, w, center, budget.epsilon, samples, false, exec);
    if (d >= budget.K)
      throw SeedTooLoose("run_cascade: seed deviation " + std::to_string(d) +
                         " >= K = " + std::to_string(budget.K));
  }

  double half = budget.epsilon / 2.0;
  rep.decay_ok = true;
  CommutatorLevel current = level0;
  for (int n = 0; n <= n_max; ++n) {
    current.n = n;
    current.measured_sup.clear();
    for (const Word& w : current.elements) {
      double d = measure_sup_deviation(p, w, center, half, samples, false, exec);
      if (d < 1e-13) {
        d = measure_sup_deviation(p, w, center, half, samples, true, exec);
        rep.dd_used = true;
      }
      current.measured_sup.push_back(d);
      if (d > budget.K / std::pow(2.0, n)) rep.decay_ok = false;
    }
    rep.levels.push_back(current);
    if (n == n_max) break;

    const Word& g1 = current.elements[0];
    const Word& g2 = current.elements[1];
    Word c1 = commutator(g1, g2);
    Word c2 = commutator(g1.inverse(), g2.inverse());
    if (c1.empty() || c2.empty() || commutes(c1, c2))
      throw std::logic_error("run_cascade: canonical commutators degenerate");
    current.elements = {c1, c2};
  }
  return rep;
}

}  // namespace cubics
