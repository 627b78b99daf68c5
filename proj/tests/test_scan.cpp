#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cubics/errors.hpp"
#include "cubics/scan.hpp"

using namespace cubics;

namespace {

RunConfig tiny_config() {
  RunConfig cfg;
  cfg.family = "markoff";
  cfg.cells_a = 2;
  cfg.cells_b = 1;
  cfg.depth = 2;
  cfg.levels = 1;
  cfg.samples = 50;
  cfg.maxlen = 2;
  return cfg;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config hashing is stable and sensitive") {
  RunConfig a = tiny_config(), b = tiny_config();
  CHECK(a.hash() == b.hash());
  b.samples = 51;
  CHECK(a.hash() != b.hash());
  CHECK(a.canonical_json() == tiny_config().canonical_json());
}

TEST_CASE("scans are byte-identical across runs and execution modes") {
  RunConfig cfg = tiny_config();
  std::string f1 = "scan_t1.jsonl", f2 = "scan_t2.jsonl", f3 = "scan_t3.jsonl";
  auto o1 = scan(cfg, f1, false, Exec::Serial);
  auto o2 = scan(cfg, f2, false, Exec::Serial);
  auto o3 = scan(cfg, f3, false, Exec::Parallel);
  CHECK(o1.records_written == 2);
  CHECK(o3.records_written == 2);
  CHECK(o2.records_written == 2);
  CHECK(o1.cells_failed == 0);
  std::string c1 = slurp(f1);
  CHECK(c1 == slurp(f2));
  CHECK(c1 == slurp(f3));
  CHECK(c1.substr(0, 1) == "{");
  std::remove(f2.c_str());
  std::remove(f3.c_str());

  SUBCASE("resume skips completed cells and leaves the file unchanged") {
    auto res = scan(cfg, f1, true, Exec::Serial);
    CHECK(res.records_written == 0);
    CHECK(res.cells_skipped == 2);
    CHECK(slurp(f1) == c1);
  }

  SUBCASE("resuming a truncated file completes it identically") {
    // keep the header and the first record only
    std::string partial;
    std::size_t first_nl = c1.find('\n');
    std::size_t second_nl = c1.find('\n', first_nl + 1);
    partial = c1.substr(0, second_nl + 1);
    std::ofstream(f1, std::ios::binary | std::ios::trunc) << partial;
    auto res = scan(cfg, f1, true, Exec::Serial);
    CHECK(res.records_written == 1);
    CHECK(res.cells_skipped == 1);
    CHECK(slurp(f1) == c1);
  }

  SUBCASE("a config mismatch is refused on resume") {
    RunConfig other = cfg;
    other.seed = 99;
    CHECK_THROWS_AS(scan(other, f1, true, Exec::Serial), std::runtime_error);
  }

  SUBCASE("heatmap renders a PPM over the scan grid") {
    heatmap(f1, "cascade.last_sup", "scan_t.ppm");
    std::string ppm = slurp("scan_t.ppm");
    CHECK(ppm.substr(0, 2) == "P6");
    std::stringstream hdr(ppm);
    std::string magic;
    int w = 0, h = 0, maxv = 0;
    hdr >> magic >> w >> h >> maxv;
    CHECK(w == 2);
    CHECK(h == 1);
    CHECK(maxv == 255);
    std::remove("scan_t.ppm");
  }

  std::remove(f1.c_str());
}

TEST_CASE("heatmap rejects an empty record set") {
  std::ofstream("scan_empty.jsonl", std::ios::trunc);
  CHECK_THROWS_AS(heatmap("scan_empty.jsonl", "a", "scan_empty.ppm"), MixedGrids);
  std::remove("scan_empty.jsonl");
}
