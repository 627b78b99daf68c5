#include <doctest.h>

#include "cubics/errors.hpp"
#include "cubics/infinity.hpp"

using namespace cubics;

TEST_CASE("charts near the coordinate vertices") {
  ChartPoint c = to_chart({100.0, 1.0, 2.0});
  CHECK(c.vertex == Vertex::v1);
  CHECK(std::abs(c.u1 - 0.01) < 1e-15);
  CHECK(std::abs(c.u2 - 0.02) < 1e-15);
  CHECK(to_chart({1.0, -200.0, 3.0}).vertex == Vertex::v2);
  CHECK(to_chart({1.0, 2.0, cplx(0.0, 500.0)}).vertex == Vertex::v3);
  CHECK_THROWS_AS(to_chart({1.0, 1.0, 1.0}), NotNearVertex);
  CHECK_THROWS_AS(to_chart({10.0, 9.0, 1.0}), NotNearVertex);
}

TEST_CASE("distance to the vertex set") {
  auto [v, d] = dist_to_vertices({1000.0, 3.0, 4.0});
  CHECK(v == Vertex::v1);
  CHECK(d == doctest::Approx(std::sqrt(9.0 + 16.0) / 1000.0));
}

TEST_CASE("the gamma table has the advertised source/target bookkeeping") {
  for (GammaStyle style : {GammaStyle::MarkoffCommutators, GammaStyle::DMCommutators}) {
    GammaTable g = build_gamma_ij(style, 2);  // construction self-checks Ind/Attr
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        CHECK(is_cyclically_reduced(g[i][j]));
        CHECK(classify(g[i][j]).kind == Kind::Hyperbolic);
        CHECK(g[j][i] == g[i][j].inverse());
        auto ia = ind_attr(g[i][j]);
        CHECK(vertex_index(ia.ind) == i);
        CHECK(vertex_index(ia.attr) == j);
      }
  }
}

TEST_CASE("the Markoff gamma_12 is the 14-letter commutator") {
  GammaTable g = build_gamma_ij(GammaStyle::MarkoffCommutators);
  CHECK(g[0][2] == commutator(word_gy().pow(2), word_gz().pow(2)));
  CHECK(g[0][1].size() == 14);
  CHECK(g[0][1].str() == "yzyzxyxyzyzxyx");
}

TEST_CASE("the deformation-style gamma_12 reduces to the closed form") {
  // [f_x, f_z] with f_x = g_x^k, f_z = g_z^-1 f_x g_z collapses to
  // (s_y s_z)^k (s_x s_z)(s_y s_z)^{k-1} (s_y s_x)(s_z s_y)^k (s_x s_y)(s_z s_y)^{k-1}(s_z s_x)
  for (int k : {1, 2, 3}) {
    Word yz = Word::parse("yz"), zy = Word::parse("zy");
    Word expect = yz.pow(k) * Word::parse("xz") * yz.pow(k - 1) * Word::parse("yx") *
                  zy.pow(k) * Word::parse("xy") * zy.pow(k - 1) * Word::parse("zx");
    GammaTable g = build_gamma_ij(GammaStyle::DMCommutators, k);
    CHECK(g[0][1] == expect);
  }
}

TEST_CASE("escape cascade from a deep chart point on the Markoff surface") {
  Params p = markoff_params();
  GammaTable g = build_gamma_ij(GammaStyle::MarkoffCommutators);
  auto cert = escape_cascade(p, g, {1e4, 2.0, 3.0}, 3);
  CHECK(cert.lambda < 1.0);
  CHECK(cert.lambda >= 0.0);  // lambda ~ 1e-193 here; deeper seeds may underflow
  CHECK(cert.verified_levels == 4);
  double log10_lambda = cert.entries[0].log10_dist - cert.log10_dist_q;
  CHECK(log10_lambda < 0.0);
  // base vertex v1: even levels land at v3, odd levels at v2
  for (const auto& e : cert.entries) {
    CHECK(e.vertex == (e.n % 2 == 0 ? Vertex::v3 : Vertex::v2));
    CHECK(e.log10_dist < 0.0);
    // the certified bound: dist_n <= lambda^{4^n} dist(q)
    CHECK(e.log10_dist <= std::pow(4.0, e.n) * log10_lambda + cert.log10_dist_q + 1.0);
  }
  // the actual contraction is far stronger than the certified bound:
  // the log-distance itself gets raised to roughly the 4th power per level
  for (std::size_t i = 0; i + 1 < cert.entries.size(); ++i)
    CHECK(cert.entries[i + 1].log10_dist < 4.0 * cert.entries[i].log10_dist);
}

TEST_CASE("points far from every vertex are rejected") {
  Params p = markoff_params();
  GammaTable g = build_gamma_ij(GammaStyle::MarkoffCommutators);
  CHECK_THROWS_AS(escape_cascade(p, g, {3.0, 3.0, 3.0}, 2), NotNearVertex);
}
