#include "cubics/scan.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "cubics/cascade.hpp"
#include "cubics/errors.hpp"
#include "cubics/fatou.hpp"
#include "cubics/fixed_points.hpp"
#include "cubics/infinity.hpp"

namespace cubics {

using json = nlohmann::ordered_json;

std::string RunConfig::canonical_json() const {
  json j;
  j["family"] = family;
  j["a_min"] = a_min;
  j["a_max"] = a_max;
  j["cells_a"] = cells_a;
  j["perturb_min"] = perturb_min;
  j["perturb_max"] = perturb_max;
  j["cells_b"] = cells_b;
  j["depth"] = depth;
  j["levels"] = levels;
  j["samples"] = samples;
  j["maxlen"] = maxlen;
  j["precision"] = precision;
  j["seed"] = seed;
  return j.dump();
}

std::uint64_t RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_json()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double lerp_cell(double lo, double hi, int i, int n) {
  if (n <= 1) return lo;
  return lo + (hi - lo) * i / (n - 1);
}

json run_cell(const RunConfig& cfg, int ia, int ib) {
  double a = lerp_cell(cfg.a_min, cfg.a_max, ia, cfg.cells_a);
  double perturb = lerp_cell(cfg.perturb_min, cfg.perturb_max, ib, cfg.cells_b);

  Params p;
  C3 cascade_center{0.0, 0.0, 0.0};
  if (cfg.family == "dm") {
    p = dm_params(a);
    cascade_center = {a, 2.0, 2.0};
  } else if (cfg.family == "markoff") {
    p = markoff_params();
  } else if (cfg.family == "picard") {
    p = picard_params();
  } else if (cfg.family == "torus") {
    p = torus_params(a);
  } else {
    throw std::invalid_argument("scan: unknown family " + cfg.family);
  }
  p.D += perturb;

  json rec;
  rec["cell"] = {ia, ib};
  rec["a"] = a;
  rec["perturb"] = perturb;
  rec["params"] = {p.A.real(), p.B.real(), p.C.real(), p.D.real()};

  // Fatou seed: family root + monotone-escape certification
  json fatou;
  try {
    cplx u = cfg.family == "dm" ? cplx(dm_fatou_root(a)) : cubic_escape_root(p.D);
    fatou["seed_u"] = {u.real(), u.imag()};
    auto cert = certify_monotone_escape(p, {u, u, u}, cfg.depth, Exec::Serial);
    fatou["status"] = cert.status == CertStatus::Certified ? "Certified"
                      : cert.status == CertStatus::FailedWithWitness
                          ? "FailedWithWitness"
                          : "Inconclusive";
    if (cert.status == CertStatus::FailedWithWitness)
      fatou["witness"] = cert.witness_word.str();
  } catch (const NoEscapeRoot&) {
    fatou["status"] = "NoEscapeRoot";
  } catch (const BracketFailure&) {
    fatou["status"] = "BracketFailure";
  }
  rec["fatou"] = fatou;

  // cascade decay on a small ball
  json casc;
  try {
    CascadeBudget budget = budget_for(0.02);
    CommutatorLevel level0;
    if (cfg.family == "dm") {
      level0 = seed_dm(a, 0.5).level;
    } else {
      level0 = seed_markoff();
    }
    auto rep = run_cascade(level0, p, budget, cascade_center, cfg.levels, cfg.samples,
                           Exec::Serial);
    casc["decay_ok"] = rep.decay_ok;
    casc["dd_used"] = rep.dd_used;
    const auto& last = rep.levels.back();
    double worst = 0.0;
    for (double d : last.measured_sup) worst = std::max(worst, d);
    casc["last_sup"] = worst;
    casc["status"] = rep.decay_ok ? "DecayOk" : "DecayViolated";
  } catch (const SeedTooLoose&) {
    casc["status"] = "SeedTooLoose";
  } catch (const NoReturnFound&) {
    casc["status"] = "NoReturnFound";
  }
  rec["cascade"] = casc;

  // escape cascade from a deep chart point
  json esc;
  try {
    auto cert = escape_cascade(p, build_gamma_ij(GammaStyle::MarkoffCommutators),
                               {1e4, 2.0, 3.0}, std::min(cfg.levels, 3));
    esc["status"] = "Verified";
    esc["lambda"] = cert.lambda;
    esc["verified_levels"] = cert.verified_levels;
  } catch (const ContractionFailure&) {
    esc["status"] = "ContractionFailure";
  } catch (const NotNearVertex&) {
    esc["status"] = "NotNearVertex";
  }
  rec["escape"] = esc;

  NewtonStrategy st;
  st.grid_n = 6;
  st.random_complex = 60;
  st.seed = cfg.seed;
  rec["property_p_flags"] = property_p_screen(p, cfg.maxlen, st).size();

  return rec;
}

}  // namespace

ScanOutcome scan(const RunConfig& cfg, const std::string& out_path, bool resume,
                 Exec exec) {
  ScanOutcome outcome;
  std::string expected_hash = hash_hex(cfg.hash());

  std::set<std::pair<int, int>> done;
  bool append = false;
  if (resume) {
    std::ifstream in(out_path);
    std::string line;
    if (in && std::getline(in, line)) {
      json header = json::parse(line);
      if (header.value("config_hash", "") != expected_hash)
        throw std::runtime_error("scan: resume file has a different config hash");
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line);
        done.insert({rec["cell"][0].get<int>(), rec["cell"][1].get<int>()});
      }
      append = true;
    }
  }

  std::ofstream out(out_path, append ? std::ios::app : std::ios::trunc);
  if (!out) throw std::runtime_error("scan: cannot open " + out_path);
  if (!append) {
    json header;
    header["config_hash"] = expected_hash;
    header["config"] = json::parse(cfg.canonical_json());
    out << header.dump() << '\n';
  }

  struct Cell { int ia, ib; };
  std::vector<Cell> todo;
  for (int ia = 0; ia < cfg.cells_a; ++ia)
    for (int ib = 0; ib < cfg.cells_b; ++ib) {
      if (done.count({ia, ib})) {
        ++outcome.cells_skipped;
        continue;
      }
      todo.push_back({ia, ib});
    }

  std::vector<std::string> lines(todo.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < todo.size(); ++i) {
      try {
        lines[i] = run_cell(cfg, todo[i].ia, todo[i].ib).dump();
      } catch (const std::exception& e) {
        json rec;
        rec["cell"] = {todo[i].ia, todo[i].ib};
        rec["error"] = e.what();
        lines[i] = rec.dump();
      }
    }
  } else {
    for (std::size_t i = 0; i < todo.size(); ++i) {
      try {
        lines[i] = run_cell(cfg, todo[i].ia, todo[i].ib).dump();
      } catch (const std::exception& e) {
        json rec;
        rec["cell"] = {todo[i].ia, todo[i].ib};
        rec["error"] = e.what();
        lines[i] = rec.dump();
      }
    }
  }

  for (std::size_t i = 0; i < todo.size(); ++i) {
    out << lines[i] << '\n';
    if (lines[i].find("\"error\"") != std::string::npos) ++outcome.cells_failed;
    ++outcome.records_written;
  }
  return outcome;
}

void heatmap(const std::string& jsonl_path, const std::string& field,
             const std::string& out_ppm) {
  std::ifstream in(jsonl_path);
  if (!in) throw std::runtime_error("heatmap: cannot open " + jsonl_path);
  std::string line;
  if (!std::getline(in, line)) throw MixedGrids("heatmap: empty record set");
  json header = json::parse(line);
  int w = header["config"]["cells_a"], h = header["config"]["cells_b"];

  std::vector<double> values(static_cast<std::size_t>(w) * h, 0.0);
  std::vector<char> seen(values.size(), 0);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json rec = json::parse(line);
    int ia = rec["cell"][0].get<int>(), ib = rec["cell"][1].get<int>();
    if (ia < 0 || ia >= w || ib < 0 || ib >= h)
      throw MixedGrids("heatmap: cell outside the header grid");
    json cur = rec;
    std::stringstream ss(field);
    std::string part;
    bool found = true;
    while (std::getline(ss, part, '.')) {
      if (!cur.contains(part)) { found = false; break; }
      cur = cur[part];
    }
    double v = found && cur.is_number() ? cur.get<double>() : 0.0;
    values[static_cast<std::size_t>(ib) * w + ia] = v;
    seen[static_cast<std::size_t>(ib) * w + ia] = 1;
  }
  if (std::count(seen.begin(), seen.end(), 1) == 0)
    throw MixedGrids("heatmap: no records");

  double lo = 1e300, hi = -1e300;
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  std::ofstream out(out_ppm, std::ios::binary);
  out << "P6\n" << w << " " << h << "\n255\n";
  for (int ib = 0; ib < h; ++ib)
    for (int ia = 0; ia < w; ++ia) {
      double v = values[static_cast<std::size_t>(ib) * w + ia];
      double t = hi > lo ? (v - lo) / (hi - lo) : 0.5;
      unsigned char rgb[3] = {static_cast<unsigned char>(255.0 * t), 0,
                              static_cast<unsigned char>(255.0 * (1.0 - t))};
      out.write(reinterpret_cast<char*>(rgb), 3);
    }
}

}  // namespace cubics
