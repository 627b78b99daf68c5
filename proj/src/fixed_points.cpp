#include "cubics/fixed_points.hpp"

#include <algorithm>
#include <cmath>

#include "cubics/sampling.hpp"

namespace cubics {

FPKind classify_fixed_point(const RestrictedDerivative& rd) {
  if (rd.at_singular_point) return FPKind::SingularSurfacePoint;
  cplx l1 = rd.eigenvalues[0], l2 = rd.eigenvalues[1];
  cplx tr = l1 + l2;
  double big = std::max(std::abs(l1), std::abs(l2));

  // a defective (shear) matrix perturbs its eigenvalues at sqrt(eps) scale,
  // so the unit-eigenvalue test must be much looser than machine precision
  bool both_one = std::abs(l1 - 1.0) < 1e-6 && std::abs(l2 - 1.0) < 1e-6;
  if (both_one) {
    Eigen::Matrix2cd nil = rd.matrix2 - Eigen::Matrix2cd::Identity();
    if (nil.norm() > 1e-6) return FPKind::Shear;
    return FPKind::ParabolicLike;
  }

  // distance of the trace from the real segment [-2, 2]
  double dist;
  if (std::abs(tr.imag()) > 1e-12) {
    double xr = std::clamp(tr.real(), -2.0, 2.0);
    dist = std::abs(tr - cplx(xr, 0.0));
  } else {
    dist = std::max(0.0, std::abs(tr.real()) - 2.0);
  }

  if (dist > 1e-6 && big > 1.0 + 1e-6) return FPKind::Saddle;
  if (dist <= 1e-6 && std::abs(big - 1.0) <= 1e-6) {
    if (std::abs(std::abs(tr.real()) - 2.0) <= 1e-6) return FPKind::ParabolicLike;
    return FPKind::EllipticLike;
  }
  return FPKind::Borderline;
}

namespace {

bool gauss_newton(const Params& p, const Word& w, C3& q, int max_iter) {
  for (int it = 0; it < max_iter; ++it) {
    Jet jet = word_jet(p, w, q);
    cplx res = surface_residual(p, q);
    C3 fq = jet.value - q;
    double err = norm(fq) + std::abs(res);
    if (err < 1e-12 * (1.0 + norm(q))) return true;
    if (!std::isfinite(err) || norm(q) > 1e8) return false;

    Eigen::Matrix<cplx, 4, 3> jac;
    jac.topRows<3>() = jet.jacobian - Eigen::Matrix3cd::Identity();
    C3 g = gradient(p, q);
    jac(3, 0) = g.x;
    jac(3, 1) = g.y;
    jac(3, 2) = g.z;
    Eigen::Vector4cd rhs;
    rhs << -fq.x, -fq.y, -fq.z, -res;
    Eigen::Vector3cd step = jac.colPivHouseholderQr().solve(rhs);
    if (!step.allFinite()) return false;
    q.x += step(0);
    q.y += step(1);
    q.z += step(2);
  }
  Jet jet = word_jet(p, w, q);
  return norm(jet.value - q) + std::abs(surface_residual(p, q)) <
         1e-10 * (1.0 + norm(q));
}

}  // namespace

std::vector<FixedPointRecord> newton_fixed_points(const Params& p, const Word& w,
                                                  const NewtonStrategy& st,
                                                  SeedStats* stats) {
  std::vector<C3> seeds;
  if (st.grid_n > 1) {
    double step = 2.0 * st.box / (st.grid_n - 1);
    for (int i = 0; i < st.grid_n; ++i)
      for (int j = 0; j < st.grid_n; ++j)
        for (int k = 0; k < st.grid_n; ++k)
          seeds.push_back({-st.box + i * step, -st.box + j * step, -st.box + k * step});
  }
  std::uint64_t state = st.seed;
  for (int i = 0; i < st.random_complex; ++i) {
    auto r = [&] { return cplx(8.0 * uniform01(state) - 4.0, 8.0 * uniform01(state) - 4.0); };
    seeds.push_back({r(), r(), r()});
  }
  if (st.torus_grid > 1) {
    const double pi = std::acos(-1.0);
    for (int i = 0; i < st.torus_grid; ++i)
      for (int j = 0; j < st.torus_grid; ++j) {
        double th = 2.0 * pi * i / st.torus_grid, ph = 2.0 * pi * j / st.torus_grid;
        seeds.push_back({-2.0 * std::cos(th), -2.0 * std::cos(ph),
                         -2.0 * std::cos(th - ph)});
      }
  }

  SeedStats local;
  local.total = static_cast<int>(seeds.size());
  std::vector<C3> found(seeds.size());
  std::vector<char> ok(seeds.size(), 0);

#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    C3 q = seeds[i];
    if (gauss_newton(p, w, q, st.max_iter)) {
      found[i] = q;
      ok[i] = 1;
    }
  }

  std::vector<FixedPointRecord> out;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (!ok[i]) continue;
    ++local.converged;
    const C3& q = found[i];
    bool dup = false;
    for (const auto& r : out)
      if (norm(r.point - q) < 1e-6) { dup = true; break; }
    if (dup) continue;

    FixedPointRecord rec;
    rec.point = q;
    rec.word = w;
    rec.map_residual = norm(apply_word(p, w, q) - q);
    rec.surface_residual = std::abs(surface_residual(p, q));
    rec.restricted = restricted_derivative(p, w, q, 1e-7);
    rec.kind = classify_fixed_point(rec.restricted);
    out.push_back(rec);
    ++local.kept;
  }
  if (stats) *stats = local;
  std::sort(out.begin(), out.end(), [](const FixedPointRecord& a, const FixedPointRecord& b) {
    auto key = [](const C3& q) {
      return std::array<double, 6>{q.x.real(), q.x.imag(), q.y.real(),
                                   q.y.imag(), q.z.real(), q.z.imag()};
    };
    return key(a.point) < key(b.point);
  });
  return out;
}

std::vector<C3> common_fixed_points(const Params& p) {
  // the involutions' common fixed equations are exactly gradient = 0
  return singular_points(p);
}

ShearCensus shear_census(const Params& p, Axis axis, double c, int samples,
                         std::uint64_t seed) {
  ShearCensus out;
  bool order4 = std::abs(c - std::sqrt(2.0)) < 1e-12;
  Word gw;
  switch (axis) {
    case Axis::X: gw = word_gx(); break;
    case Axis::Y: gw = word_gy(); break;
    case Axis::Z: gw = word_gz(); break;
  }
  Word w = gw.pow(order4 ? 4 : 2);

  auto quad_roots = [](cplx b, cplx cc) {
    cplx disc = std::sqrt(b * b - 4.0 * cc);
    return std::array<cplx, 2>{(-b + disc) / 2.0, (-b - disc) / 2.0};
  };

  std::uint64_t state = seed;
  for (int i = 0; i < samples; ++i) {
    // one free complex coordinate on the fiber; the other from the quadratic
    cplx t(6.0 * uniform01(state) - 3.0, 6.0 * uniform01(state) - 3.0);
    int pick = static_cast<int>(splitmix64(state) & 1);
    C3 q;
    bool exceptional = false;
    switch (axis) {
      case Axis::X: {  // free y, solve z; exceptional y = B/2 or z = C/2
        cplx z = quad_roots(c * t - p.C, c * c + t * t - p.A * c - p.B * t - p.D)[pick];
        q = {c, t, z};
        exceptional = std::abs(t - p.B / 2.0) < 1e-6 || std::abs(z - p.C / 2.0) < 1e-6;
        break;
      }
      case Axis::Y: {  // free z, solve x; exceptional z = C/2 or x = A/2
        cplx x = quad_roots(c * t - p.A, c * c + t * t - p.B * c - p.C * t - p.D)[pick];
        q = {x, c, t};
        exceptional = std::abs(t - p.C / 2.0) < 1e-6 || std::abs(x - p.A / 2.0) < 1e-6;
        break;
      }
      case Axis::Z: {  // free x, solve y; exceptional x = A/2 or y = B/2
        cplx y = quad_roots(c * t - p.B, c * c + t * t - p.C * c - p.A * t - p.D)[pick];
        q = {t, y, c};
        exceptional = std::abs(t - p.A / 2.0) < 1e-6 || std::abs(y - p.B / 2.0) < 1e-6;
        break;
      }
    }
    ++out.sampled;
    RestrictedDerivative rd;
    try {
      rd = restricted_derivative(p, w, q, 1e-7);
    } catch (const std::invalid_argument&) {
      ++out.anomalies;  // not actually fixed: numeric drift
      continue;
    }
    FPKind kind = classify_fixed_point(rd);
    if (kind == FPKind::Shear) {
      ++out.shear;
    } else if (exceptional || kind == FPKind::ParabolicLike ||
               kind == FPKind::SingularSurfacePoint) {
      // restricted part degenerated to the identity (or a singular point)
      ++out.exceptional;
      out.exceptional_points.push_back(q);
    } else {
      ++out.anomalies;
    }
  }
  return out;
}

std::vector<FixedPointRecord> property_p_screen(const Params& p, int max_len,
                                                const NewtonStrategy& strategy) {
  std::vector<FixedPointRecord> flagged;
  enumerate_words(max_len, Parity::Gamma, [&](const Word& w) {
    if (w.empty() || !is_cyclically_reduced(w)) return;
    if (classify(w).kind != Kind::Hyperbolic) return;
    if (w.inverse() < w) return;  // screen each element once
    for (const auto& rec : newton_fixed_points(p, w, strategy)) {
      if (rec.kind == FPKind::SingularSurfacePoint) continue;
      cplx tr = rec.restricted.matrix2.trace();
      double xr = std::clamp(tr.real(), -2.0, 2.0);
      if (std::abs(tr - cplx(xr, 0.0)) < 1e-4) flagged.push_back(rec);
    }
  });
  return flagged;
}

}  // namespace cubics
