#include "cubics/params.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "cubics/errors.hpp"
#include "cubics/sampling.hpp"

namespace cubics {

Params from_traces(const Traces& t) {
  Params p;
  p.A = t.a1 * t.a4 + t.a2 * t.a3;
  p.B = t.a2 * t.a4 + t.a1 * t.a3;
  p.C = t.a3 * t.a4 + t.a1 * t.a2;
  p.D = cplx(4.0) - (t.a1 * t.a2 * t.a3 * t.a4 + t.a1 * t.a1 + t.a2 * t.a2 + t.a3 * t.a3 +
                     t.a4 * t.a4);
  return p;
}

Traces traces_from_kappa(const Kappas& k) {
  const double pi = std::acos(-1.0);
  auto tr = [&](cplx kap) { return 2.0 * std::cos(pi * kap); };
  return {tr(k.k1), tr(k.k2), tr(k.k3), tr(k.k4)};
}

Params from_kappa(const Kappas& k) { return from_traces(traces_from_kappa(k)); }

Params markoff_params() { return {0.0, 0.0, 0.0, 0.0}; }
Params picard_params() { return {0.0, 0.0, 0.0, 4.0}; }
Params torus_params(cplx D) { return {0.0, 0.0, 0.0, D}; }

Params dm_params(double a) {
  double s = 2.0 * a + 4.0;
  return {s, s, s, -(a * a + 8.0 * a + 8.0)};
}

cplx surface_residual(const Params& p, const C3& q) {
  return q.x * q.x + q.y * q.y + q.z * q.z + q.x * q.y * q.z - p.A * q.x - p.B * q.y -
         p.C * q.z - p.D;
}

C3 gradient(const Params& p, const C3& q) {
  return {q.y * q.z - p.A + 2.0 * q.x, q.z * q.x - p.B + 2.0 * q.y,
          q.x * q.y - p.C + 2.0 * q.z};
}

bool on_surface(const Params& p, const C3& q, double tol) {
  double n = norm(q);
  return std::abs(surface_residual(p, q)) <= tol * (1.0 + n * n * n);
}

std::array<cplx, 2> surface_z_roots(const Params& p, cplx x, cplx y) {
  cplx b = x * y - p.C;
  cplx c = x * x + y * y - p.A * x - p.B * y - p.D;
  cplx disc = std::sqrt(b * b - 4.0 * c);
  return {(-b + disc) / 2.0, (-b - disc) / 2.0};
}

bool is_singular_parameter(const Traces& t, double tol) {
  for (cplx a : {t.a1, t.a2, t.a3, t.a4})
    if (std::abs(a - 2.0) <= tol || std::abs(a + 2.0) <= tol) return true;
  cplx s2 = t.a1 * t.a1 + t.a2 * t.a2 + t.a3 * t.a3 + t.a4 * t.a4;
  cplx prod = t.a1 * t.a2 * t.a3 * t.a4;
  cplx lhs = 2.0 * s2 - prod - 16.0;
  cplx rhs = (4.0 - t.a1 * t.a1) * (4.0 - t.a2 * t.a2) * (4.0 - t.a3 * t.a3) *
             (4.0 - t.a4 * t.a4);
  return std::abs(lhs * lhs - rhs) <= tol * (1.0 + std::abs(rhs));
}

namespace {

// Newton polish on the square system gradient = 0 (Hessian is symmetric)
bool polish_gradient_zero(const Params& p, C3& q) {
  for (int it = 0; it < 60; ++it) {
    C3 g = gradient(p, q);
    double gn = norm(g);
    if (gn < 1e-13 * (1.0 + norm(q))) return true;
    Eigen::Matrix3cd h;
    h << 2.0, q.z, q.y, q.z, 2.0, q.x, q.y, q.x, 2.0;
    Eigen::Vector3cd rhs(-g.x, -g.y, -g.z);
    Eigen::Vector3cd d = h.fullPivLu().solve(rhs);
    if (!d.allFinite()) return false;
    q.x += d(0);
    q.y += d(1);
    q.z += d(2);
    if (norm(q) > 1e6) return false;
  }
  return norm(gradient(p, q)) < 1e-10 * (1.0 + norm(q));
}

void add_candidate(const Params& p, C3 q, std::vector<C3>& out) {
  if (!polish_gradient_zero(p, q)) return;
  if (std::abs(surface_residual(p, q)) > 1e-10 * (1.0 + std::pow(norm(q), 3))) return;
  for (const C3& r : out)
    if (norm(r - q) < 1e-6) return;
  out.push_back(q);
}

}  // namespace

std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs) {
  while (coeffs.size() > 1 && std::abs(coeffs.front()) < 1e-14) coeffs.erase(coeffs.begin());
  int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) comp(0, i) = -coeffs[i + 1] / coeffs[0];
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
  std::vector<cplx> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

std::vector<C3> singular_points(const Params& p) {
  std::vector<C3> out;

  // elimination of (x, y) from the gradient system gives a quintic in z
  std::vector<cplx> quintic = {2.0,
                               -p.C,
                               -16.0,
                               8.0 * p.C + p.A * p.B,
                               32.0 - 2.0 * (p.A * p.A + p.B * p.B),
                               4.0 * p.A * p.B - 16.0 * p.C};
  for (cplx z : polynomial_roots(quintic)) {
    cplx den = 4.0 - z * z;
    if (std::abs(den) < 1e-8) continue;  // handled by the degenerate branches
    add_candidate(p, {(2.0 * p.A - p.B * z) / den, (2.0 * p.B - p.A * z) / den, z}, out);
  }

  // z = 2: the linear system for (x, y) is consistent only when A = B
  if (std::abs(p.A - p.B) < 1e-9) {
    cplx disc = std::sqrt(p.A * p.A / 4.0 - 4.0 * (p.C - 4.0));
    for (cplx t : {(p.A / 2.0 + disc) / 2.0, (p.A / 2.0 - disc) / 2.0})
      add_candidate(p, {t, p.A / 2.0 - t, 2.0}, out);
  }
  // z = -2: consistent only when A = -B
  if (std::abs(p.A + p.B) < 1e-9) {
    cplx disc = std::sqrt(p.A * p.A / 4.0 + 4.0 * (p.C + 4.0));
    for (cplx y : {(-p.A / 2.0 + disc) / 2.0, (-p.A / 2.0 - disc) / 2.0})
      add_candidate(p, {y + p.A / 2.0, y, -2.0}, out);
  }

  // multi-start Newton fallback (degenerate eliminations, robustness)
  for (double x = -6.0; x <= 6.0; x += 3.0)
    for (double y = -6.0; y <= 6.0; y += 3.0)
      for (double z = -6.0; z <= 6.0; z += 3.0) add_candidate(p, {x, y, z}, out);
  std::uint64_t state = 0x5eedULL;
  for (int i = 0; i < 100; ++i) {
    auto r = [&] { return cplx(8.0 * uniform01(state) - 4.0, 8.0 * uniform01(state) - 4.0); };
    add_candidate(p, {r(), r(), r()}, out);
  }

  std::sort(out.begin(), out.end(), [](const C3& a, const C3& b) {
    auto key = [](const C3& q) {
      return std::array<double, 6>{q.x.real(), q.x.imag(), q.y.real(),
                                   q.y.imag(), q.z.real(), q.z.imag()};
    };
    return key(a) < key(b);
  });
  return out;
}

cplx chart_denominator(const Params& p, Chart c, const C3& q) {
  C3 g = gradient(p, q);
  switch (c) {
    case Chart::XY: return g.z;  // 2z + xy - C
    case Chart::YZ: return g.x;  // 2x + yz - A
    case Chart::ZX: return g.y;  // 2y + zx - B
  }
  return {};
}

namespace {

// re-solve the chart's dependent coordinate, picking the root nearest ref
C3 resolve_chart(const Params& p, Chart c, cplx s, cplx t, const C3& ref) {
  auto pick = [](const std::array<cplx, 2>& roots, cplx near) {
    return std::abs(roots[0] - near) < std::abs(roots[1] - near) ? roots[0] : roots[1];
  };
  switch (c) {
    case Chart::XY: {
      cplx z = pick(surface_z_roots(p, s, t), ref.z);
      return {s, t, z};
    }
    case Chart::YZ: {  // dependent x: x^2 + (yz - A)x + (y^2 + z^2 - By - Cz - D) = 0
      cplx b = s * t - p.A;
      cplx cc = s * s + t * t - p.B * s - p.C * t - p.D;
      cplx disc = std::sqrt(b * b - 4.0 * cc);
      cplx x = pick({(-b + disc) / 2.0, (-b - disc) / 2.0}, ref.x);
      return {x, s, t};
    }
    case Chart::ZX: {  // dependent y
      cplx b = s * t - p.B;
      cplx cc = s * s + t * t - p.C * s - p.A * t - p.D;
      cplx disc = std::sqrt(b * b - 4.0 * cc);
      cplx y = pick({(-b + disc) / 2.0, (-b - disc) / 2.0}, ref.y);
      return {t, y, s};
    }
  }
  return ref;
}

std::array<cplx, 2> chart_coords(Chart c, const C3& q) {
  switch (c) {
    case Chart::XY: return {q.x, q.y};
    case Chart::YZ: return {q.y, q.z};
    case Chart::ZX: return {q.z, q.x};
  }
  return {};
}

}  // namespace

cplx volume_form_ratio(const Params& p, const C3& q, Chart a, Chart b) {
  cplx da = chart_denominator(p, a, q), db = chart_denominator(p, b, q);
  if (std::abs(da) < 1e-12 || std::abs(db) < 1e-12)
    throw ChartDegenerate("volume_form_ratio: chart denominator vanishes");

  auto [s0, t0] = chart_coords(a, q);
  auto eval = [&](cplx s, cplx t) {
    return chart_coords(b, resolve_chart(p, a, s, t, q));
  };
  // 4th-order central differences of the chart-b coordinates
  double h = 1e-3 * (1.0 + norm(q));
  Eigen::Matrix2cd jac;
  for (int k = 0; k < 2; ++k) {
    auto at = [&](double step) {
      return k == 0 ? eval(s0 + step, t0) : eval(s0, t0 + step);
    };
    auto f2p = at(2 * h), f1p = at(h), f1m = at(-h), f2m = at(-2 * h);
    for (int r = 0; r < 2; ++r)
      jac(r, k) = (-f2p[r] + 8.0 * f1p[r] - 8.0 * f1m[r] + f2m[r]) / (12.0 * h);
  }
  return jac.determinant() * da / db;
}

}  // namespace cubics
