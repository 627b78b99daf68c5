#include "cubics/fatou.hpp"

#include <algorithm>
#include <cmath>

#include "cubics/action.hpp"
#include "cubics/errors.hpp"

namespace cubics {

FatouBall fatou_ball(cplx A, cplx B, cplx C, double R) {
  double r = std::max({std::abs(A), std::abs(B), std::abs(C)});
  if (R <= 2.0 + std::sqrt(r))
    throw RadiusTooSmall("fatou_ball: need R > 2 + sqrt(r)");
  double eps = std::min(R - (2.0 + std::sqrt(r)), R + 1.0 - std::sqrt(4.0 * R + r + 1.0));
  return {r, R, eps};
}

namespace {

double min_modulus(const C3& q) {
  return std::min({std::abs(q.x), std::abs(q.y), std::abs(q.z)});
}

cplx coord(const C3& q, Axis a) {
  switch (a) {
    case Axis::X: return q.x;
    case Axis::Y: return q.y;
    case Axis::Z: return q.z;
  }
  return {};
}

struct DfsState {
  const Params* p;
  double floor;  // 2 + sqrt(r)
  int depth;
  std::vector<double> mins;  // per depth (1-based index depth-1)
  Word witness;
  bool failed = false;
};

// returns false once a violation has been recorded
bool dfs(DfsState& st, const C3& q, Word& path, int level) {
  if (level >= st.depth) return true;
  for (int i = 0; i < 3; ++i) {
    Axis a = static_cast<Axis>(i);
    if (!path.empty() && path.letters().back() == a) continue;
    C3 nq = apply_letter(*st.p, a, q);
    double before = std::abs(coord(q, a)), after = std::abs(coord(nq, a));
    double mm = min_modulus(nq);
    st.mins[level] = std::min(st.mins[level], mm);
    path.push_right(a);
    if (after + 1e-12 < before || mm <= st.floor) {
      st.witness = path;
      st.failed = true;
      return false;
    }
    bool ok = dfs(st, nq, path, level + 1);
    Word trimmed(std::vector<Axis>(path.letters().begin(), path.letters().end() - 1));
    path = trimmed;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

FatouCertificate certify_monotone_escape(const Params& p, const C3& q, int depth,
                                         Exec exec) {
  double r = std::max({std::abs(p.A), std::abs(p.B), std::abs(p.C)});
  double floor = 2.0 + std::sqrt(r);
  FatouCertificate cert;
  cert.depth = depth;
  cert.min_modulus_by_depth.assign(std::max(depth, 0), 0.0);
  if (depth <= 0) {
    cert.status = CertStatus::Inconclusive;
    return cert;
  }

  if (exec == Exec::Serial || depth <= 2) {
    DfsState st{&p, floor, depth, std::vector<double>(depth, 1e300), Word(), false};
    Word path;
    dfs(st, q, path, 0);
    cert.min_modulus_by_depth = st.mins;
    cert.status = st.failed ? CertStatus::FailedWithWitness : CertStatus::Certified;
    cert.witness_word = st.witness;
    return cert;
  }

  // parallel over depth-2 subtrees, deterministic merge in DFS order
  struct Prefix { Word w; C3 pt; };
  std::vector<Prefix> leaves;
  DfsState head{&p, floor, 2, std::vector<double>(2, 1e300), Word(), false};
  {
    Word path;
    // run the first two levels serially, collecting leaves
    for (int i = 0; i < 3 && !head.failed; ++i) {
      Axis a = static_cast<Axis>(i);
      C3 q1 = apply_letter(p, a, q);
      double mm1 = min_modulus(q1);
      head.mins[0] = std::min(head.mins[0], mm1);
      if (std::abs(coord(q1, a)) + 1e-12 < std::abs(coord(q, a)) || mm1 <= floor) {
        head.failed = true;
        head.witness = Word(std::vector<Axis>{a});
        break;
      }
      for (int j = 0; j < 3; ++j) {
        Axis b = static_cast<Axis>(j);
        if (b == a) continue;
        C3 q2 = apply_letter(p, b, q1);
        double mm2 = min_modulus(q2);
        head.mins[1] = std::min(head.mins[1], mm2);
        Word w(std::vector<Axis>{a, b});
        if (std::abs(coord(q2, b)) + 1e-12 < std::abs(coord(q1, b)) || mm2 <= floor) {
          head.failed = true;
          head.witness = w;
          break;
        }
        leaves.push_back({w, q2});
      }
      if (head.failed) break;
    }
  }
  if (head.failed) {
    cert.status = CertStatus::FailedWithWitness;
    cert.witness_word = head.witness;
    for (int d = 0; d < std::min(depth, 2); ++d) cert.min_modulus_by_depth[d] = head.mins[d];
    return cert;
  }

  std::vector<DfsState> sub(leaves.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    sub[i] = DfsState{&p, floor, depth - 2, std::vector<double>(depth - 2, 1e300), Word(),
                      false};
    Word path = leaves[i].w;
    // continue the path below the prefix: dfs levels count from 0
    DfsState& st = sub[i];
    dfs(st, leaves[i].pt, path, 0);
  }

  cert.min_modulus_by_depth[0] = head.mins[0];
  cert.min_modulus_by_depth[1] = head.mins[1];
  for (int d = 2; d < depth; ++d) cert.min_modulus_by_depth[d] = 1e300;
  cert.status = CertStatus::Certified;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (int d = 0; d < depth - 2; ++d)
      cert.min_modulus_by_depth[d + 2] =
          std::min(cert.min_modulus_by_depth[d + 2], sub[i].mins[d]);
    if (sub[i].failed && cert.status == CertStatus::Certified) {
      cert.status = CertStatus::FailedWithWitness;
      cert.witness_word = sub[i].witness;
    }
  }
  return cert;
}

BQReport bq_orbit_test(const Params& p, const C3& q, int depth) {
  BQReport rep;
  rep.depth = depth;
  rep.radius2_heuristic =
      std::abs(p.A) > 0.0 || std::abs(p.B) > 0.0 || std::abs(p.C) > 0.0;

  auto coord_in_interval = [](cplx c) {
    return std::abs(c.imag()) <= 1e-9 && c.real() >= -2.0 - 1e-9 && c.real() <= 2.0 + 1e-9;
  };
  enumerate_words(depth, Parity::Gamma, [&](const Word& w) {
    C3 img = apply_word(p, w, q);
    bool any_in_interval = coord_in_interval(img.x) || coord_in_interval(img.y) ||
                           coord_in_interval(img.z);
    if (any_in_interval) rep.condition1 = false;
    if (std::abs(img.x) <= 2.0 || std::abs(img.y) <= 2.0 || std::abs(img.z) <= 2.0)
      ++rep.condition2_violations;
  });
  return rep;
}

cplx cubic_escape_root(cplx D) {
  auto roots = polynomial_roots({1.0, 3.0, 0.0, -D});
  cplx best = 0.0;
  for (cplx u : roots) {
    // Newton polish
    for (int i = 0; i < 8; ++i) {
      cplx f = u * u * u + 3.0 * u * u - D;
      cplx df = 3.0 * u * u + 6.0 * u;
      if (std::abs(df) < 1e-14) break;
      u -= f / df;
    }
    if (std::abs(u) > std::abs(best)) best = u;
  }
  if (std::abs(best) <= 2.0 * (1.0 + 1e-12))
    throw NoEscapeRoot("cubic_escape_root: no root with |u| > 2 (D = 4)");
  return best;
}

double dm_fatou_root(double a) {
  auto pa = [&](double u) {
    return u * u * u + 3.0 * u * u - 3.0 * (2.0 * a + 4.0) * u + a * a + 8.0 * a + 8.0;
  };
  double right = -(2.0 + std::sqrt(2.0 * a + 4.0));
  double left = -50.0;
  if (!(pa(right) > 0.0 && pa(left) < 0.0))
    throw BracketFailure("dm_fatou_root: no sign change on [-50, -(2+sqrt(2a+4))]");
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (left + right);
    (pa(mid) < 0.0 ? left : right) = mid;
  }
  double u = 0.5 * (left + right);
  for (int i = 0; i < 6; ++i) {
    double df = 3.0 * u * u + 6.0 * u - 3.0 * (2.0 * a + 4.0);
    u -= pa(u) / df;
  }
  return u;
}

}  // namespace cubics
