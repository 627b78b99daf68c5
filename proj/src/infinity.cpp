#include "cubics/infinity.hpp"

#include <cmath>

#include "cubics/action.hpp"
#include "cubics/errors.hpp"

namespace cubics {

ChartPoint to_chart(const C3& q, double radius) {
  cplx c[3] = {q.x, q.y, q.z};
  int dom = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(c[i]) > std::abs(c[dom])) dom = i;
  cplx others[2];
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != dom) others[k++] = c[i] / c[dom];
  if (std::abs(others[0]) >= radius || std::abs(others[1]) >= radius)
    throw NotNearVertex("to_chart: no coordinate dominates by 1/radius");
  return {static_cast<Vertex>(dom), others[0], others[1]};
}

std::pair<Vertex, double> dist_to_vertices(const C3& q, double radius) {
  ChartPoint c = to_chart(q, radius);
  return {c.vertex, std::sqrt(std::norm(c.u1) + std::norm(c.u2))};
}

GammaTable build_gamma_ij(GammaStyle style, int k) {
  Word fx, fy, fz;
  if (style == GammaStyle::MarkoffCommutators) {
    fx = word_gx().pow(2);
    fy = word_gy().pow(2);
    fz = word_gz().pow(2);
  } else {
    fx = word_gx().pow(k);
    fy = word_gy().inverse() * fx * word_gy();
    fz = word_gz().inverse() * fx * word_gz();
  }
  GammaTable g{};
  g[0][1] = commutator(fx, fz);
  g[0][2] = commutator(fy, fz);
  g[1][2] = commutator(fy, fx);
  g[1][0] = g[0][1].inverse();
  g[2][0] = g[0][2].inverse();
  g[2][1] = g[1][2].inverse();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      IndAttr ia = ind_attr(g[i][j]);  // also asserts hyperbolic + cyc. reduced
      if (vertex_index(ia.ind) != i || vertex_index(ia.attr) != j)
        throw std::logic_error("build_gamma_ij: Ind/Attr bookkeeping broken");
    }
  return g;
}

namespace {

// Deep levels of the cascade produce coordinates whose decimal exponents
// themselves overflow any machine integer (level n roughly raises the
// log-distance to the 4th power). Orbits are therefore evaluated in a scaled
// representation m * 10^e with a complex double mantissa and a double decimal
// exponent; once |e| outgrows integer precision the mantissa is only
// qualitative, but the log-scale bookkeeping the certificate needs stays
// accurate to the exponent's relative precision.
struct Sc {
  cplx m{};       // 1 <= |m| < 10, or 0
  double e = 0;

  static Sc of(cplx v, double e0 = 0) {
    Sc s;
    double a = std::abs(v);
    if (a == 0.0 || !std::isfinite(a)) return s;
    int k = static_cast<int>(std::floor(std::log10(a)));
    s.m = v * std::pow(10.0, -k);
    s.e = e0 + k;
    // guard against log10 rounding at power-of-ten boundaries
    double am = std::abs(s.m);
    if (am >= 10.0) { s.m /= 10.0; ++s.e; }
    if (am < 1.0 && am > 0.0) { s.m *= 10.0; --s.e; }
    return s;
  }

  bool zero() const { return m == cplx(0.0); }
  double log10_abs() const { return e + std::log10(std::abs(m)); }
};

Sc mul(const Sc& a, const Sc& b) {
  if (a.zero() || b.zero()) return {};
  return Sc::of(a.m * b.m, a.e + b.e);
}

Sc neg(const Sc& a) { return {-a.m, a.e}; }

Sc add(const Sc& a, const Sc& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  const Sc& big = a.e >= b.e ? a : b;
  const Sc& sml = a.e >= b.e ? b : a;
  double d = big.e - sml.e;
  if (d > 32) return big;  // the smaller term is below mantissa precision
  return Sc::of(big.m + sml.m * std::pow(10.0, -d), big.e);
}

struct ScPoint {
  Sc x, y, z;
};

ScPoint apply_letter_sc(const Params& p, Axis l, const ScPoint& q) {
  switch (l) {
    case Axis::X:
      return {add(add(neg(q.x), neg(mul(q.y, q.z))), Sc::of(p.A)), q.y, q.z};
    case Axis::Y:
      return {q.x, add(add(neg(q.y), neg(mul(q.x, q.z))), Sc::of(p.B)), q.z};
    case Axis::Z:
      return {q.x, q.y, add(add(neg(q.z), neg(mul(q.x, q.y))), Sc::of(p.C))};
  }
  return q;
}

ScPoint apply_word_sc(const Params& p, const Word& w, ScPoint q) {
  const auto& l = w.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) q = apply_letter_sc(p, *it, q);
  return q;
}

struct LogChart {
  int vertex = -1;         // -1: no coordinate dominates
  double log10_dist = 0;   // log10 of the chart distance to the vertex
};

LogChart chart_of(const ScPoint& q, double radius) {
  if (q.x.zero() || q.y.zero() || q.z.zero()) return {};
  double l[3] = {q.x.log10_abs(), q.y.log10_abs(), q.z.log10_abs()};
  if (!std::isfinite(l[0]) || !std::isfinite(l[1]) || !std::isfinite(l[2])) return {};
  int dom = 0;
  for (int i = 1; i < 3; ++i)
    if (l[i] > l[dom]) dom = i;
  double r1 = l[(dom + 1) % 3] - l[dom];  // log10 of the coordinate ratios
  double r2 = l[(dom + 2) % 3] - l[dom];
  double lr = std::log10(radius);
  if (r1 >= lr || r2 >= lr) return {};
  // log10 sqrt(10^2r1 + 10^2r2), stably in log space
  double hi = std::max(r1, r2), lo = std::min(r1, r2);
  double dist = hi + 0.5 * std::log10(1.0 + std::pow(10.0, 2.0 * (lo - hi)));
  return {dom, dist};
}

}  // namespace

EscapeCertificate escape_cascade(const Params& p, const GammaTable& gammas, const C3& q,
                                 int n_max) {
  ScPoint q0{Sc::of(q.x), Sc::of(q.y), Sc::of(q.z)};

  double radius = kChartRadius;
  for (int attempt = 0; attempt < 5; ++attempt, radius /= 2.0) {
    LogChart base = chart_of(q0, radius);
    if (base.vertex < 0) {
      if (attempt == 4) throw NotNearVertex("escape_cascade: q not near a vertex");
      continue;
    }

    int v = base.vertex;
    int i = (v + 1) % 3, j = (v + 2) % 3;
    if (i > j) std::swap(i, j);

    EscapeCertificate cert;
    cert.chart_radius = radius;
    cert.log10_dist_q = base.log10_dist;

    GammaTable gam = gammas;
    std::array<Word, 3> tau;
    bool failed = false;
    double log10_lambda = 0.0;

    for (int n = 0; n <= n_max; ++n) {
      Word eta;
      int expected;
      if (n % 2 == 0) {
        if (n > 0) {
          GammaTable next{};
          for (int m = 0; m < 3; ++m)
            for (int l = 0; l < 3; ++l)
              if (m != l) next[m][l] = commutator(tau[l], tau[m]);
          gam = next;
        }
        eta = gam[i][j];
        expected = j;
      } else {
        for (int m = 0; m < 3; ++m) {
          int a = (m + 1) % 3, b = (m + 2) % 3;
          if (a > b) std::swap(a, b);
          tau[m] = commutator(gam[m][a], gam[m][b]);
        }
        eta = tau[i];
        expected = i;
      }

      ScPoint img = apply_word_sc(p, eta, q0);
      LogChart ch = chart_of(img, radius);
      if (ch.vertex < 0 || ch.vertex != expected) {
        failed = true;
        break;
      }
      double logd = ch.log10_dist;
      if (n == 0) {
        log10_lambda = logd - cert.log10_dist_q;
        cert.lambda = std::pow(10.0, log10_lambda);  // may underflow to 0
        if (log10_lambda >= 0.0) {
          failed = true;
          break;
        }
      }
      // dist_n <= lambda^{4^n} * dist(q), with one decade of slack
      if (logd > std::pow(4.0, n) * log10_lambda + cert.log10_dist_q + 1.0) {
        failed = true;
        break;
      }
      cert.entries.push_back({n, static_cast<Vertex>(ch.vertex), logd, eta.size()});
      cert.verified_levels = n + 1;
    }

    if (!failed) return cert;
    if (attempt == 4)
      throw ContractionFailure("escape_cascade: contraction failed at all chart radii");
  }
  throw ContractionFailure("escape_cascade: unreachable");
}

}  // namespace cubics
