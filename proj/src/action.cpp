#include "cubics/action.hpp"

#include <cmath>

#include "cubics/errors.hpp"

namespace cubics {

C3 apply_letter(const Params& p, Axis l, const C3& q) {
  auto r = apply_letter_t<cplx>(ParamsT<cplx>::from(p), l, {q.x, q.y, q.z});
  return {r.x, r.y, r.z};
}

C3 apply_word(const Params& p, const Word& w, const C3& q) {
  auto r = apply_word_t<cplx>(ParamsT<cplx>::from(p), w, {q.x, q.y, q.z});
  return {r.x, r.y, r.z};
}

CheckedOrbit apply_word_checked(const Params& p, const Word& w, const C3& q,
                                bool keep_trace) {
  CheckedOrbit out{q, false, 0, {}};
  const auto& l = w.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) {
    out.point = apply_letter(p, *it, out.point);
    ++out.steps_done;
    if (keep_trace)
      out.trace.push_back({out.steps_done, *it, out.point,
                           std::abs(surface_residual(p, out.point))});
    double m = std::max({std::abs(out.point.x), std::abs(out.point.y),
                         std::abs(out.point.z)});
    if (m > kEscapeCutoff) {
      out.escaped = true;
      break;
    }
  }
  return out;
}

Eigen::Matrix3cd letter_jacobian(Axis l, const C3& q) {
  Eigen::Matrix3cd j = Eigen::Matrix3cd::Identity();
  switch (l) {
    case Axis::X:
      j(0, 0) = -1.0; j(0, 1) = -q.z; j(0, 2) = -q.y;
      break;
    case Axis::Y:
      j(1, 0) = -q.z; j(1, 1) = -1.0; j(1, 2) = -q.x;
      break;
    case Axis::Z:
      j(2, 0) = -q.y; j(2, 1) = -q.x; j(2, 2) = -1.0;
      break;
  }
  return j;
}

Jet word_jet(const Params& p, const Word& w, const C3& q) {
  Jet out{q, Eigen::Matrix3cd::Identity()};
  const auto& l = w.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) {
    out.jacobian = letter_jacobian(*it, out.value) * out.jacobian;
    out.value = apply_letter(p, *it, out.value);
  }
  return out;
}

RestrictedDerivative restricted_derivative(const Params& p, const Word& w, const C3& q,
                                           double tol) {
  C3 wq = apply_word(p, w, q);
  if (norm(wq - q) > tol * (1.0 + norm(q)))
    throw std::invalid_argument("restricted_derivative: q is not fixed by w");

  Jet jet = word_jet(p, w, q);
  C3 g = gradient(p, q);
  RestrictedDerivative out{};

  if (norm(g) < tol * (1.0 + norm2(q))) {
    // singular surface point: the full Jacobian has eigenvalue 1 along the
    // pencil direction; report the other two eigenvalues
    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(jet.jacobian);
    std::array<cplx, 3> ev{es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvalues()(2)};
    std::sort(ev.begin(), ev.end(),
              [](cplx a, cplx b) { return std::abs(a - 1.0) < std::abs(b - 1.0); });
    out.at_singular_point = true;
    out.matrix2 << ev[1], 0.0, 0.0, ev[2];
    out.eigenvalues = {ev[1], ev[2]};
    return out;
  }

  // tangent plane ker(grad^T v) = Hermitian complement of conj(grad)
  Eigen::Vector3cd gbar(std::conj(g.x), std::conj(g.y), std::conj(g.z));
  Eigen::HouseholderQR<Eigen::Matrix<cplx, 3, 1>> qr(gbar);
  Eigen::Matrix3cd hh = qr.householderQ();
  Eigen::Matrix<cplx, 3, 2> basis = hh.rightCols<2>();
  out.matrix2 = basis.adjoint() * jet.jacobian * basis;
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(out.matrix2);
  out.eigenvalues = {es.eigenvalues()(0), es.eigenvalues()(1)};
  out.at_singular_point = false;
  return out;
}

cplx pullback_volume_ratio(const Params& p, const Word& w, const C3& q) {
  C3 g = gradient(p, q);
  if (std::abs(g.z) < 1e-12)
    throw ChartDegenerate("pullback_volume_ratio: f_z vanishes at base point");
  Jet jet = word_jet(p, w, q);
  cplx zx = -g.x / g.z, zy = -g.y / g.z;  // implicit partials on the surface
  Eigen::Matrix2cd m;
  m(0, 0) = jet.jacobian(0, 0) + jet.jacobian(0, 2) * zx;
  m(0, 1) = jet.jacobian(0, 1) + jet.jacobian(0, 2) * zy;
  m(1, 0) = jet.jacobian(1, 0) + jet.jacobian(1, 2) * zx;
  m(1, 1) = jet.jacobian(1, 1) + jet.jacobian(1, 2) * zy;
  cplx den_at_image = chart_denominator(p, Chart::XY, jet.value);
  if (std::abs(den_at_image) < 1e-12)
    throw ChartDegenerate("pullback_volume_ratio: f_z vanishes at image point");
  return m.determinant() * g.z / den_at_image;
}

}  // namespace cubics
