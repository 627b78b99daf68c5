#include "cubics/fiber.hpp"

#include <cmath>

#include "cubics/action.hpp"
#include "cubics/errors.hpp"

namespace cubics {

Eigen::Matrix2cd fiber_linear_part(const Params&, Axis, cplx c) {
  Eigen::Matrix2cd m;
  m << -1.0, -c, c, c * c - 1.0;
  return m;
}

FiberClassification classify_fiber(const Params& p, Axis axis, cplx c) {
  FiberClassification out{};
  cplx t = c * c - 2.0;
  cplx disc = std::sqrt(t * t - 4.0);
  out.multipliers = {(t + disc) / 2.0, (t - disc) / 2.0};
  (void)fiber_linear_part(p, axis, c);

  bool real_c = std::abs(c.imag()) < 1e-12;
  if (real_c && std::abs(std::abs(c.real()) - 2.0) < 1e-12) {
    out.kind = FiberKind::ParabolicFiber;
  } else if (real_c && std::abs(c.real()) < 2.0) {
    out.kind = FiberKind::Elliptic;
    out.rotation = std::acos(c.real() / 2.0) / std::acos(-1.0);  // theta in (0,1)
  } else {
    out.kind = FiberKind::Loxodromic;
  }
  return out;
}

namespace {
Word axis_g_word(Axis a) {
  switch (a) {
    case Axis::X: return word_gx();
    case Axis::Y: return word_gy();
    case Axis::Z: return word_gz();
  }
  return {};
}

std::array<cplx, 3> cyclic_coords(Axis a, const C3& q) {
  switch (a) {
    case Axis::X: return {q.x, q.y, q.z};
    case Axis::Y: return {q.y, q.z, q.x};
    case Axis::Z: return {q.z, q.x, q.y};
  }
  return {};
}
}  // namespace

std::optional<int> find_return_iterate(const Params& p, const TubeSpec& tube, const C3& q,
                                       const Region2& target, int n_max) {
  Word g = axis_g_word(tube.axis);
  Word ginv = g.inverse();
  C3 fwd = q, bwd = q;

  auto check = [&](const C3& pt, int n) -> bool {
    auto [c, u1, u2] = cyclic_coords(tube.axis, pt);
    if (std::abs(c - tube.center) > tube.radius &&
        std::abs(c - tube.center) > 1e-6 * (1.0 + std::abs(tube.center)))
      throw EscapedTube("find_return_iterate: conserved coordinate drifted at n=" +
                        std::to_string(n));
    return target.contains(u1, u2);
  };

  if (check(fwd, 0)) return 0;
  for (int n = 1; n <= n_max; ++n) {
    fwd = apply_word(p, g, fwd);
    if (check(fwd, n)) return n;
    bwd = apply_word(p, ginv, bwd);
    if (check(bwd, -n)) return -n;
  }
  return std::nullopt;
}

bool near_bad_fiber(const Params&, Axis, cplx c, double tol) {
  return std::abs(c - 2.0) < tol || std::abs(c + 2.0) < tol;
}

}  // namespace cubics
