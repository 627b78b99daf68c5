#include <doctest.h>

#include "cubics/fixed_points.hpp"
#include "cubics/picard.hpp"

using namespace cubics;

namespace {

RestrictedDerivative make_rd(cplx a11, cplx a12, cplx a21, cplx a22) {
  RestrictedDerivative rd{};
  rd.matrix2 << a11, a12, a21, a22;
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(rd.matrix2);
  rd.eigenvalues = {es.eigenvalues()(0), es.eigenvalues()(1)};
  rd.at_singular_point = false;
  return rd;
}

}  // namespace

TEST_CASE("classification of synthetic restricted derivatives") {
  CHECK(classify_fixed_point(make_rd(1.0, 1.0, 0.0, 1.0)) == FPKind::Shear);
  CHECK(classify_fixed_point(make_rd(1.0, 0.0, 0.0, 1.0)) == FPKind::ParabolicLike);
  CHECK(classify_fixed_point(make_rd(3.0, 0.0, 0.0, 1.0 / 3.0)) == FPKind::Saddle);
  cplx w = std::polar(1.0, 0.7);
  CHECK(classify_fixed_point(make_rd(w, 0.0, 0.0, std::conj(w))) == FPKind::EllipticLike);
  RestrictedDerivative sing{};
  sing.at_singular_point = true;
  CHECK(classify_fixed_point(sing) == FPKind::SingularSurfacePoint);
}

TEST_CASE("common fixed points of the involutions are the nodes") {
  auto pts = common_fixed_points(picard_params());
  CHECK(pts.size() == 4);
  auto mk = common_fixed_points(markoff_params());
  REQUIRE(mk.size() == 1);
  CHECK(norm(mk[0]) < 1e-9);
}

TEST_CASE("Newton finds genuine on-surface fixed points") {
  Params p = picard_params();
  Word w = Word::parse("aabb");
  NewtonStrategy st;
  st.grid_n = 6;
  st.box = 4.0;
  st.random_complex = 80;
  st.torus_grid = 8;
  SeedStats stats;
  auto recs = newton_fixed_points(p, w, st, &stats);
  CHECK(stats.total > 0);
  CHECK(stats.kept == static_cast<int>(recs.size()));
  CHECK(!recs.empty());
  for (const auto& r : recs) {
    CHECK(r.map_residual < 1e-8 * (1.0 + norm(r.point)));
    CHECK(r.surface_residual < 1e-8 * (1.0 + std::pow(norm(r.point), 3)));
  }
  // results are deterministically ordered and deduplicated
  for (std::size_t i = 0; i + 1 < recs.size(); ++i)
    CHECK(norm(recs[i].point - recs[i + 1].point) > 1e-6);
}

TEST_CASE("shear census on the x = 0 Markoff fiber") {
  auto census = shear_census(markoff_params(), Axis::X, 0.0, 300, 2);
  CHECK(census.sampled == 300);
  CHECK(census.anomalies == 0);
  CHECK(census.shear > 0);
  CHECK(census.shear + census.exceptional == census.sampled);
  // exceptional points cluster on the y = B/2 or z = C/2 lines
  for (const C3& q : census.exceptional_points) {
    bool on_line = std::abs(q.y) < 1e-6 || std::abs(q.z) < 1e-6;
    CHECK(on_line);
  }
}

TEST_CASE("census on the order-four fiber x = sqrt(2)") {
  auto census = shear_census(markoff_params(), Axis::X, std::sqrt(2.0), 100, 3);
  CHECK(census.anomalies == 0);
  CHECK(census.shear > 0);
}

TEST_CASE("property-P screen runs clean on the Markoff surface") {
  NewtonStrategy st;
  st.grid_n = 5;
  st.box = 4.0;
  st.random_complex = 40;
  auto flagged = property_p_screen(markoff_params(), 4, st);
  for (const auto& rec : flagged) {
    CHECK(rec.kind != FPKind::SingularSurfacePoint);
    cplx tr = rec.restricted.matrix2.trace();
    double xr = std::clamp(tr.real(), -2.0, 2.0);
    CHECK(std::abs(tr - cplx(xr, 0.0)) < 1e-4);
  }
}
