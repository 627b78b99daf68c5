#include <doctest.h>

#include "cubics/errors.hpp"
#include "cubics/params.hpp"

using namespace cubics;

TEST_CASE("trace-zero parameters are the Picard surface") {
  Params p = from_traces({0.0, 0.0, 0.0, 0.0});
  CHECK(p == picard_params());
  // kappa = 1/2 gives trace 2cos(pi/2) = 0
  Params q = from_kappa({0.5, 0.5, 0.5, 0.5});
  CHECK(std::abs(q.A) < 1e-14);
  CHECK(std::abs(q.B) < 1e-14);
  CHECK(std::abs(q.C) < 1e-14);
  CHECK(std::abs(q.D - 4.0) < 1e-14);
}

TEST_CASE("named families") {
  CHECK(markoff_params() == Params{0.0, 0.0, 0.0, 0.0});
  CHECK(picard_params() == Params{0.0, 0.0, 0.0, 4.0});
  CHECK(torus_params(2.5) == Params{0.0, 0.0, 0.0, 2.5});
  Params dm = dm_params(0.0);
  CHECK(dm == Params{4.0, 4.0, 4.0, -8.0});
}

TEST_CASE("residual, gradient and membership") {
  Params mk = markoff_params();
  C3 origin{0.0, 0.0, 0.0};
  CHECK(std::abs(surface_residual(mk, origin)) == 0.0);
  CHECK(norm(gradient(mk, origin)) == 0.0);
  CHECK(on_surface(mk, origin, 1e-12));
  C3 triple{-3.0, -3.0, -3.0};  // 27 - 27 = 0
  CHECK(std::abs(surface_residual(mk, triple)) < 1e-12);
  CHECK_FALSE(on_surface(mk, {1.0, 1.0, 1.0}, 1e-12));
}

TEST_CASE("fiber quadratic roots lie on the surface") {
  Params p = dm_params(0.7);
  cplx x{0.3, -0.1}, y{1.1, 0.4};
  for (cplx z : surface_z_roots(p, x, y))
    CHECK(std::abs(surface_residual(p, {x, y, z})) < 1e-10);
}

TEST_CASE("polynomial_roots solves a cubic with known roots") {
  // (u-1)(u-2)(u-3) = u^3 - 6u^2 + 11u - 6
  auto roots = polynomial_roots({1.0, -6.0, 11.0, -6.0});
  REQUIRE(roots.size() == 3);
  std::vector<double> re;
  for (cplx r : roots) {
    CHECK(std::abs(r.imag()) < 1e-9);
    re.push_back(r.real());
  }
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(1.0));
  CHECK(re[1] == doctest::Approx(2.0));
  CHECK(re[2] == doctest::Approx(3.0));
}

TEST_CASE("the Picard surface has exactly the four Cayley nodes") {
  auto sing = singular_points(picard_params());
  REQUIRE(sing.size() == 4);
  std::vector<C3> expect = {{-2.0, -2.0, -2.0},
                            {-2.0, 2.0, 2.0},
                            {2.0, -2.0, 2.0},
                            {2.0, 2.0, -2.0}};
  for (const C3& e : expect) {
    bool hit = false;
    for (const C3& s : sing)
      if (norm(s - e) < 1e-8) hit = true;
    CHECK(hit);
  }
}

TEST_CASE("singular points satisfy both defining systems") {
  for (const Params& p : {markoff_params(), dm_params(0.3), picard_params()}) {
    for (const C3& s : singular_points(p)) {
      CHECK(std::abs(surface_residual(p, s)) < 1e-8);
      CHECK(norm(gradient(p, s)) < 1e-8);
    }
  }
  // the Markoff surface is singular exactly at the origin
  auto mk = singular_points(markoff_params());
  REQUIRE(mk.size() == 1);
  CHECK(norm(mk[0]) < 1e-9);
}

TEST_CASE("singular parameter detection") {
  CHECK(is_singular_parameter({2.0, 0.3, 0.5, 0.7}));
  CHECK(is_singular_parameter({0.0, 0.0, 0.0, 0.0}));  // Cayley case
  CHECK_FALSE(is_singular_parameter({1.0, 0.0, 0.0, 0.0}));
}

TEST_CASE("the area form agrees across charts") {
  Params p = torus_params(2.0);
  cplx x{0.3, 0.0}, y{0.4, 0.0};
  cplx z = surface_z_roots(p, x, y)[0];
  C3 q{x, y, z};
  REQUIRE(std::abs(surface_residual(p, q)) < 1e-10);
  CHECK(std::abs(volume_form_ratio(p, q, Chart::XY, Chart::YZ) - 1.0) < 1e-6);
  CHECK(std::abs(volume_form_ratio(p, q, Chart::XY, Chart::ZX) - 1.0) < 1e-6);
  CHECK(std::abs(volume_form_ratio(p, q, Chart::YZ, Chart::ZX) - 1.0) < 1e-6);
}

TEST_CASE("chart denominators are the gradient components") {
  Params p = dm_params(0.2);
  C3 q{1.0, -0.5, 0.25};
  C3 g = gradient(p, q);
  CHECK(chart_denominator(p, Chart::XY, q) == g.z);
  CHECK(chart_denominator(p, Chart::YZ, q) == g.x);
  CHECK(chart_denominator(p, Chart::ZX, q) == g.y);
}

TEST_CASE("degenerate charts are rejected") {
  // at a singular point every chart denominator vanishes
  Params p = markoff_params();
  CHECK_THROWS_AS(volume_form_ratio(p, {0.0, 0.0, 0.0}, Chart::XY, Chart::YZ),
                  ChartDegenerate);
}
