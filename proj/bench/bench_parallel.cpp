// Compares the OpenMP kernels against the serial reference implementations.

#include <chrono>
#include <cstdio>

#include "cubics/cascade.hpp"
#include "cubics/fatou.hpp"

using namespace cubics;

namespace {

template <class F>
double time_it(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  Params p = markoff_params();
  std::printf("%-44s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

  {
    Word w = commutator(word_gx().pow(2), word_gy().pow(2));
    C3 center{0.0, 0.0, 0.0};
    double rs = 0, rp = 0;
    double ts = time_it([&] {
      rs = measure_sup_deviation(p, w, center, 0.05, 200000, false, Exec::Serial);
    });
    double tp = time_it([&] {
      rp = measure_sup_deviation(p, w, center, 0.05, 200000, false, Exec::Parallel);
    });
    std::printf("%-44s %9.3fs %9.3fs %7.2fx\n", "sup-deviation (2e5 samples, double)", ts,
                tp, ts / tp);
    if (rs != rp) std::printf("  WARNING: results differ (%g vs %g)\n", rs, rp);
  }

  {
    Word w = word_gx().pow(2);
    C3 center{0.0, 0.0, 0.0};
    double ts = time_it([&] {
      measure_sup_deviation(p, w, center, 0.05, 20000, true, Exec::Serial);
    });
    double tp = time_it([&] {
      measure_sup_deviation(p, w, center, 0.05, 20000, true, Exec::Parallel);
    });
    std::printf("%-44s %9.3fs %9.3fs %7.2fx\n", "sup-deviation (2e4 samples, dd)", ts, tp,
                ts / tp);
  }

  {
    C3 q{-3.0, -3.0, -3.0};
    FatouCertificate cs, cp;
    double ts = time_it([&] { cs = certify_monotone_escape(p, q, 14, Exec::Serial); });
    double tp = time_it([&] { cp = certify_monotone_escape(p, q, 14, Exec::Parallel); });
    std::printf("%-44s %9.3fs %9.3fs %7.2fx\n", "monotone-escape certification (depth 14)",
                ts, tp, ts / tp);
    if (cs.status != cp.status) std::printf("  WARNING: statuses differ\n");
  }

  return 0;
}
