#pragma once

// Charts near the triangle at infinity, distances to the vertex set, the six
// hyperbolic words gamma_{i,j}, and the lambda^{4^n} escape cascade.

#include "cubics/params.hpp"
#include "cubics/types.hpp"
#include "cubics/word.hpp"

namespace cubics {

inline constexpr double kChartRadius = 0.2;

struct ChartPoint {
  Vertex vertex;
  cplx u1, u2;  // ratios of the two non-dominant coordinates to the dominant
};

// throws NotNearVertex if no coordinate dominates by 1/radius
ChartPoint to_chart(const C3& q, double radius = kChartRadius);

std::pair<Vertex, double> dist_to_vertices(const C3& q, double radius = kChartRadius);

enum class GammaStyle { MarkoffCommutators, DMCommutators };

// gammas[i][j] (i != j) with Ind = v_{i+1}, Attr = v_{j+1}; gammas[j][i] is
// the inverse; every entry is cyclically reduced and hyperbolic
using GammaTable = std::array<std::array<Word, 3>, 3>;
GammaTable build_gamma_ij(GammaStyle style, int k = 2);

struct EscapeEntry {
  int n;
  Vertex vertex;
  double log10_dist;
  std::size_t word_length;
};

struct EscapeCertificate {
  double lambda = 0;        // measured level-0 contraction ratio
  double log10_dist_q = 0;  // starting distance to the vertex set
  std::vector<EscapeEntry> entries;
  int verified_levels = 0;
  double chart_radius = kChartRadius;
};

// builds eta_n per the inductive commutator scheme, applies each eta_n to the
// original q in extended precision, and checks dist_n <= lambda^{4^n};
// halves the chart radius and retries (up to 4 times) on ContractionFailure
EscapeCertificate escape_cascade(const Params& p, const GammaTable& gammas, const C3& q,
                                 int n_max);

}  // namespace cubics
