#include <doctest.h>

#include "cubics/errors.hpp"
#include "cubics/fatou.hpp"

using namespace cubics;

TEST_CASE("the escape ball radius at the Markoff parameters") {
  FatouBall b = fatou_ball(0.0, 0.0, 0.0, 3.0);
  CHECK(b.r == 0.0);
  CHECK(b.R == 3.0);
  // min{3 - 2, 4 - sqrt(13)} = 4 - sqrt(13)
  CHECK(b.epsilon == doctest::Approx(4.0 - std::sqrt(13.0)));
  CHECK_THROWS_AS(fatou_ball(0.0, 0.0, 0.0, 2.0), RadiusTooSmall);
  CHECK_THROWS_AS(fatou_ball(4.0, 0.0, 0.0, 3.5), RadiusTooSmall);  // needs R > 4
}

TEST_CASE("monotone escape certificate at a Markoff triple") {
  Params p = markoff_params();
  C3 q{-3.0, -3.0, -3.0};
  auto cert = certify_monotone_escape(p, q, 6, Exec::Serial);
  CHECK(cert.status == CertStatus::Certified);
  CHECK(cert.depth == 6);
  REQUIRE(cert.min_modulus_by_depth.size() == 6);
  for (double m : cert.min_modulus_by_depth) CHECK(m > 2.0);
  // the minimum over a layer never decreases along the tree
  for (std::size_t i = 1; i < cert.min_modulus_by_depth.size(); ++i)
    CHECK(cert.min_modulus_by_depth[i] >= cert.min_modulus_by_depth[i - 1]);
}

TEST_CASE("serial and parallel certification agree") {
  Params p = dm_params(0.5);
  double u = dm_fatou_root(0.5);
  C3 q{u, u, u};
  auto s = certify_monotone_escape(p, q, 7, Exec::Serial);
  auto par = certify_monotone_escape(p, q, 7, Exec::Parallel);
  CHECK(s.status == par.status);
  REQUIRE(s.min_modulus_by_depth.size() == par.min_modulus_by_depth.size());
  for (std::size_t i = 0; i < s.min_modulus_by_depth.size(); ++i)
    CHECK(s.min_modulus_by_depth[i] == doctest::Approx(par.min_modulus_by_depth[i]));
}

TEST_CASE("points near the origin fail with a witness") {
  Params p = markoff_params();
  auto cert = certify_monotone_escape(p, {0.1, 0.1, 0.1}, 4, Exec::Serial);
  CHECK(cert.status == CertStatus::FailedWithWitness);
  CHECK_FALSE(cert.witness_word.empty());
  auto par = certify_monotone_escape(p, {0.1, 0.1, 0.1}, 4, Exec::Parallel);
  CHECK(par.status == CertStatus::FailedWithWitness);
  CHECK(certify_monotone_escape(p, {0.1, 0.1, 0.1}, 0).status ==
        CertStatus::Inconclusive);
}

TEST_CASE("BQ orbit test on an escaping Markoff triple") {
  Params p = markoff_params();
  BQReport rep = bq_orbit_test(p, {-3.0, -3.0, -3.0}, 4);
  CHECK(rep.condition1);
  CHECK(rep.condition2_violations == 0);
  CHECK_FALSE(rep.radius2_heuristic);  // exact at (A,B,C) = (0,0,0)

  BQReport bad = bq_orbit_test(p, {0.5, 0.5, 0.5}, 2);
  CHECK_FALSE(bad.condition1);
  CHECK(bad.condition2_violations > 0);
  CHECK(bq_orbit_test(dm_params(0.2), {9.0, 9.0, 9.0}, 2).radius2_heuristic);
}

TEST_CASE("cubic escape roots") {
  for (cplx D : {cplx(0.0), cplx(-1.0), cplx(10.0), cplx(0.0, 5.0)}) {
    cplx u = cubic_escape_root(D);
    CHECK(std::abs(u) > 2.0);
    CHECK(std::abs(u * u * u + 3.0 * u * u - D) < 1e-9);
  }
  CHECK(cubic_escape_root(0.0).real() == doctest::Approx(-3.0));
  // D = 4: u^3 + 3u^2 - 4 = (u - 1)(u + 2)^2 has no root off the closed 2-disk
  CHECK_THROWS_AS(cubic_escape_root(4.0), NoEscapeRoot);
}

TEST_CASE("the deformation family's real escape root") {
  for (double a : {0.0, 0.5, 1.0, -1.5}) {
    double u = dm_fatou_root(a);
    CHECK(u < -(2.0 + std::sqrt(2.0 * a + 4.0)));
    double res = u * u * u + 3.0 * u * u - 3.0 * (2.0 * a + 4.0) * u + a * a + 8.0 * a + 8.0;
    CHECK(std::abs(res) < 1e-9);
  }
}
