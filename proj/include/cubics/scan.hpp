#pragma once

// Parameter-slice scans with resumable line-delimited JSON output, config
// hashing for reproducibility, and PPM heatmap rendering.

#include <cstdint>
#include <string>
#include <vector>

#include "cubics/params.hpp"

namespace cubics {

struct RunConfig {
  std::string family = "dm";  // dm | markoff | picard | torus
  double a_min = -1.9, a_max = 1.9;
  int cells_a = 8;
  double perturb_min = 0.0, perturb_max = 0.0;  // additive D perturbation
  int cells_b = 1;
  int depth = 6;       // fatou certification depth
  int levels = 3;      // cascade levels
  int samples = 400;   // sup-deviation samples
  int maxlen = 4;      // property-P word length
  std::string precision = "double";  // double | dd
  std::uint64_t seed = 1;

  std::string canonical_json() const;
  std::uint64_t hash() const;  // FNV-1a of the canonical form
};

struct ScanOutcome {
  int records_written = 0;
  int cells_skipped = 0;  // already present when resuming
  int cells_failed = 0;
};

// iterates the (a, perturbation) grid; per cell runs the Fatou seed
// (dm_fatou_root / cubic_escape_root + certify_monotone_escape), the cascade
// decay, and the property-P screen; appends one JSON object per line, header
// line first; resumable by cell_id; deterministic byte-for-byte
ScanOutcome scan(const RunConfig& cfg, const std::string& out_path, bool resume,
                 Exec exec = Exec::Parallel);

// renders the selected per-record scalar field (dotted JSON path) as a PPM
// with a linear blue-to-red ramp; throws MixedGrids on inconsistent records
void heatmap(const std::string& jsonl_path, const std::string& field,
             const std::string& out_ppm);

}  // namespace cubics
