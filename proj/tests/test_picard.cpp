#include <doctest.h>

#include "cubics/errors.hpp"
#include "cubics/picard.hpp"

using namespace cubics;

TEST_CASE("Phi lands on the Picard surface") {
  Params p = picard_params();
  for (cplx u : {cplx(0.7, 0.2), cplx(-1.3, 0.1), cplx(0.0, 2.0)})
    for (cplx v : {cplx(1.1, -0.4), cplx(0.5, 0.5)}) {
      C3 q = phi({u, v});
      CHECK(std::abs(surface_residual(p, q)) < 1e-12 * (1.0 + std::pow(norm(q), 3)));
    }
  CHECK_THROWS_AS(phi({0.0, 1.0}), ZeroCoordinate);
}

TEST_CASE("eta is the monomial torus map") {
  TorusPoint t{cplx(0.8, 0.3), cplx(1.2, -0.5)};
  TorusPoint r = eta(kMatGx, t);  // [[1,0],[-2,1]]
  CHECK(std::abs(r.u - t.u) < 1e-14);
  CHECK(std::abs(r.v - t.v / (t.u * t.u)) < 1e-14);
  TorusPoint s = eta(kMatGy, t);  // [[1,2],[0,1]]
  CHECK(std::abs(s.u - t.u * t.v * t.v) < 1e-13);
  CHECK(std::abs(s.v - t.v) < 1e-14);
  CHECK_THROWS_AS(eta(kMatGx, {0.0, 1.0}), ZeroCoordinate);
}

TEST_CASE("the semiconjugacy holds for the generators and longer words") {
  for (const char* s : {"a", "b", "c", "A", "ab", "aabb", "abC"}) {
    double res = verify_semiconjugacy(Word::parse(s), 200, 17);
    CHECK(res < 1e-9);
  }
}

TEST_CASE("node eigenvalues are {1, mu^2, mu^-2}") {
  Word w = Word::parse("aabb");  // hyperbolic, trace -14
  Mat2 m = to_sl2(w);
  REQUIRE(m.trace() == -14);
  double tr = 14.0;
  double mu = (tr + std::sqrt(tr * tr - 4.0)) / 2.0;
  for (const C3& c : kCayleyPoints) {
    auto ev = sing_pt_eigenvalues(w, c);
    CHECK(std::abs(ev[0] - 1.0) < 1e-8);
    CHECK(std::abs(ev[1] - mu * mu) < 1e-8 * (1.0 + mu * mu));
    CHECK(std::abs(ev[2] - 1.0 / (mu * mu)) < 1e-8);
  }
}

TEST_CASE("exact Jacobian identities at (-2,-2,-2)") {
  // spot value: the word with matrix [[1,2],[2,5]] has diagonal (3, 35, -3)
  Word w = Word::parse("yzxz");  // g_x^-1 g_y
  Mat2 m = to_sl2(w);
  REQUIRE(m.m11 == 1);
  REQUIRE(m.m12 == 2);
  REQUIRE(m.m21 == 2);
  REQUIRE(m.m22 == 5);
  IntMat3 n = exact_picard_jacobian(w, -2, -2, -2);
  CHECK(n.e[0][0] == 3);
  CHECK(n.e[1][1] == 35);
  CHECK(n.e[2][2] == -3);
  CHECK(n.e[0][0] + n.e[1][1] + n.e[2][2] == 35);

  for (const char* s : {"a", "ab", "aabb", "abC", "aaBB", "acbA"})
    CHECK(check_exact_jacobian_identities(Word::parse(s)));
}

TEST_CASE("hyperbolic fixed points stay in the real cube and are saddles") {
  auto rep = hyperbolic_locus_check(Word::parse("aabb"));
  CHECK(rep.fixed_points_found > 0);
  CHECK(rep.all_in_box);
  CHECK(rep.all_saddles);
  CHECK(rep.torus_lift_ok);
  CHECK(rep.moduli_match);
  CHECK(rep.outliers.empty());
  CHECK_THROWS_AS(hyperbolic_locus_check(Word::parse("ab")), std::invalid_argument);
}
