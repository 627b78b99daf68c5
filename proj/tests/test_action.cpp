#include <doctest.h>

#include "cubics/action.hpp"
#include "cubics/errors.hpp"
#include "cubics/sampling.hpp"

using namespace cubics;

namespace {

C3 sample_point(const Params& p, std::uint64_t& state) {
  cplx x(4.0 * uniform01(state) - 2.0, 4.0 * uniform01(state) - 2.0);
  cplx y(4.0 * uniform01(state) - 2.0, 4.0 * uniform01(state) - 2.0);
  return {x, y, surface_z_roots(p, x, y)[0]};
}

}  // namespace

TEST_CASE("each generator is an involution") {
  Params p = dm_params(0.4);
  std::uint64_t state = 11;
  for (int i = 0; i < 20; ++i) {
    C3 q = sample_point(p, state);
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      C3 r = apply_letter(p, a, apply_letter(p, a, q));
      CHECK(norm(r - q) < 1e-12 * (1.0 + norm(q)));
    }
  }
}

TEST_CASE("the action preserves the surface") {
  Params p = torus_params(cplx(1.0, 0.5));
  std::uint64_t state = 3;
  Word w = Word::parse("xyzxzy");
  for (int i = 0; i < 20; ++i) {
    C3 q = sample_point(p, state);
    C3 img = apply_word(p, w, q);
    CHECK(std::abs(surface_residual(p, img)) < 1e-8 * (1.0 + std::pow(norm(img), 3)));
  }
}

TEST_CASE("word application composes (rightmost letter first)") {
  Params p = markoff_params();
  Word u = Word::parse("zy"), v = Word::parse("xz");
  C3 q{0.3, -0.7, 1.1};
  C3 lhs = apply_word(p, u * v, q);
  C3 rhs = apply_word(p, u, apply_word(p, v, q));
  CHECK(norm(lhs - rhs) < 1e-12);
  // a single letter acts on its own coordinate only
  C3 sx = apply_letter(p, Axis::X, q);
  CHECK(sx.x == -q.x - q.y * q.z + p.A);
  CHECK(sx.y == q.y);
  CHECK(sx.z == q.z);
}

TEST_CASE("checked orbits detect escape") {
  Params p = markoff_params();
  auto big = apply_word_checked(p, word_gx().pow(40), {1e20, 1e20, 1e20}, true);
  CHECK(big.escaped);
  CHECK(big.steps_done < 80);
  CHECK(!big.trace.empty());
  auto small = apply_word_checked(p, word_gx(), {0.1, 0.1, 0.1});
  CHECK_FALSE(small.escaped);
  CHECK(small.steps_done == 2);
}

TEST_CASE("word jet matches finite differences") {
  Params p = dm_params(-0.3);
  Word w = Word::parse("xyzy");
  C3 q{0.4, -0.2, 0.9};
  Jet jet = word_jet(p, w, q);
  CHECK(norm(jet.value - apply_word(p, w, q)) < 1e-12);
  double h = 1e-6;
  for (int col = 0; col < 3; ++col) {
    C3 qp = q, qm = q;
    cplx* cp[3] = {&qp.x, &qp.y, &qp.z};
    cplx* cm[3] = {&qm.x, &qm.y, &qm.z};
    *cp[col] += h;
    *cm[col] -= h;
    C3 diff = apply_word(p, w, qp) - apply_word(p, w, qm);
    Eigen::Vector3cd fd(diff.x / (2.0 * h), diff.y / (2.0 * h), diff.z / (2.0 * h));
    CHECK((jet.jacobian.col(col) - fd).norm() < 1e-6);
  }
}

TEST_CASE("restricted derivative of g_x^2 on the x = 0 Markoff fiber is a shear") {
  Params p = markoff_params();
  cplx y{0.5, 0.0};
  cplx z = surface_z_roots(p, 0.0, y)[0];
  C3 q{0.0, y, z};
  Word w = word_gx().pow(2);
  REQUIRE(norm(apply_word(p, w, q) - q) < 1e-12);  // the fiber is pointwise fixed
  auto rd = restricted_derivative(p, w, q);
  CHECK_FALSE(rd.at_singular_point);
  // defective eigenvalues carry a sqrt(eps)-size numerical error
  CHECK(std::abs(rd.eigenvalues[0] - 1.0) < 1e-6);
  CHECK(std::abs(rd.eigenvalues[1] - 1.0) < 1e-6);
  CHECK((rd.matrix2 - Eigen::Matrix2cd::Identity()).norm() > 1e-6);  // nontrivial shear
}

TEST_CASE("restricted derivative requires a fixed point") {
  Params p = markoff_params();
  CHECK_THROWS_AS(restricted_derivative(p, word_gx(), {0.3, 0.4, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("pullback of the area form") {
  Params p = torus_params(2.0);
  std::uint64_t state = 19;
  for (int i = 0; i < 10; ++i) {
    C3 q = sample_point(p, state);
    // a single involution reverses orientation of the form, Gamma preserves it
    CHECK(std::abs(pullback_volume_ratio(p, Word::parse("x"), q) + 1.0) < 1e-8);
    CHECK(std::abs(pullback_volume_ratio(p, word_gx(), q) - 1.0) < 1e-8);
    CHECK(std::abs(pullback_volume_ratio(p, Word::parse("ab"), q) - 1.0) < 1e-8);
  }
}
