// cubic-explorer: command-line front end for the surface-automorphism toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cubics/cascade.hpp"
#include "cubics/errors.hpp"
#include "cubics/fatou.hpp"
#include "cubics/fiber.hpp"
#include "cubics/fixed_points.hpp"
#include "cubics/infinity.hpp"
#include "cubics/picard.hpp"
#include "cubics/scan.hpp"
#include "cubics/sl2.hpp"

using namespace cubics;
using json = nlohmann::ordered_json;

namespace {

struct ParamsOpt {
  std::vector<double> abcd;  // 4 reals or 8 (re, im interleaved)
  std::string family;
  double a = 0.0;

  Params resolve() const {
    if (!abcd.empty()) {
      if (abcd.size() == 4) return {abcd[0], abcd[1], abcd[2], abcd[3]};
      if (abcd.size() == 8)
        return {cplx(abcd[0], abcd[1]), cplx(abcd[2], abcd[3]), cplx(abcd[4], abcd[5]),
                cplx(abcd[6], abcd[7])};
      throw CLI::ValidationError("--params needs 4 reals or 8 re/im values");
    }
    if (family == "markoff") return markoff_params();
    if (family == "picard") return picard_params();
    if (family == "dm") return dm_params(a);
    if (family == "torus") return torus_params(a);
    throw CLI::ValidationError("pass --params or --family {markoff,picard,dm,torus}");
  }
};

void add_params_flags(CLI::App* cmd, ParamsOpt& po) {
  cmd->add_option("--params", po.abcd, "surface parameters A,B,C,D (4 reals or 8 re/im)");
  cmd->add_option("--family", po.family, "named family: markoff, picard, dm, torus");
  cmd->add_option("--a", po.a, "family parameter (dm slice / torus D)");
}

C3 resolve_point(const std::vector<double>& v) {
  if (v.size() == 3) return {v[0], v[1], v[2]};
  if (v.size() == 6) return {cplx(v[0], v[1]), cplx(v[2], v[3]), cplx(v[4], v[5])};
  throw CLI::ValidationError("--point needs 3 reals or 6 re/im values");
}

json to_json(cplx c) { return {c.real(), c.imag()}; }
json to_json(const C3& q) { return {to_json(q.x), to_json(q.y), to_json(q.z)}; }

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out);
    f << j.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    f << text;
  }
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Identity: return "identity";
    case Kind::Elliptic: return "elliptic";
    case Kind::Parabolic: return "parabolic";
    case Kind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

const char* status_name(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "Certified";
    case CertStatus::FailedWithWitness: return "FailedWithWitness";
    case CertStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* fp_kind_name(FPKind k) {
  switch (k) {
    case FPKind::Saddle: return "saddle";
    case FPKind::EllipticLike: return "elliptic";
    case FPKind::ParabolicLike: return "parabolic";
    case FPKind::Shear: return "shear";
    case FPKind::SingularSurfacePoint: return "singular-point";
    case FPKind::Borderline: return "borderline";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explorer for the automorphism group of cubic surfaces "
               "x^2+y^2+z^2+xyz = Ax+By+Cz+D"};
  app.require_subcommand(1);

  std::string out;
  app.add_option("--out", out, "output file (default: stdout)")->capture_default_str();

  // classify-word ------------------------------------------------------------
  std::string word_text;
  auto* c_classify = app.add_subcommand("classify-word", "classify a reduced word");
  c_classify->add_option("word", word_text, "letters xyz, or aAbBcC for g_x^±1 ...")
      ->required();

  // orbit ---------------------------------------------------------------------
  ParamsOpt orbit_p;
  std::vector<double> orbit_point;
  std::string orbit_word;
  auto* c_orbit = app.add_subcommand("orbit", "trace a word applied letter by letter");
  add_params_flags(c_orbit, orbit_p);
  c_orbit->add_option("--point", orbit_point, "starting point")->required();
  c_orbit->add_option("--word", orbit_word, "word to apply")->required();

  // certify-fatou --------------------------------------------------------------
  ParamsOpt fatou_p;
  std::vector<double> fatou_point;
  int fatou_depth = 8;
  bool fatou_serial = false;
  auto* c_fatou = app.add_subcommand("certify-fatou",
                                     "monotone-escape certificate for a point");
  add_params_flags(c_fatou, fatou_p);
  c_fatou->add_option("--point", fatou_point)->required();
  c_fatou->add_option("--depth", fatou_depth);
  c_fatou->add_flag("--serial", fatou_serial, "disable the parallel tree walk");

  // bq-test ---------------------------------------------------------------------
  ParamsOpt bq_p;
  std::vector<double> bq_point;
  int bq_depth = 6;
  auto* c_bq = app.add_subcommand("bq-test", "interval/annulus orbit conditions");
  add_params_flags(c_bq, bq_p);
  c_bq->add_option("--point", bq_point)->required();
  c_bq->add_option("--depth", bq_depth);

  // cascade -----------------------------------------------------------------
  ParamsOpt casc_p;
  double casc_eps = 0.01;
  int casc_levels = 3, casc_samples = 2000;
  std::string casc_precision = "double";
  auto* c_casc = app.add_subcommand("cascade", "iterated-commutator decay report");
  add_params_flags(c_casc, casc_p);
  c_casc->add_option("--eps", casc_eps, "ball radius");
  c_casc->add_option("--levels", casc_levels);
  c_casc->add_option("--samples", casc_samples);
  c_casc->add_option("--precision", casc_precision)
      ->check(CLI::IsMember({"double", "dd"}));

  // escape --------------------------------------------------------------------
  ParamsOpt esc_p;
  std::vector<double> esc_point;
  int esc_levels = 3, esc_k = 2;
  std::string esc_style = "markoff";
  auto* c_esc = app.add_subcommand("escape", "lambda^(4^n) escape cascade near infinity");
  add_params_flags(c_esc, esc_p);
  c_esc->add_option("--point", esc_point)->required();
  c_esc->add_option("--levels", esc_levels);
  c_esc->add_option("--style", esc_style)->check(CLI::IsMember({"markoff", "dm"}));
  c_esc->add_option("--k", esc_k, "return power for the dm style");

  // picard-verify ------------------------------------------------------------
  std::string pv_word;
  int pv_samples = 500;
  std::uint64_t pv_seed = 1;
  auto* c_pv = app.add_subcommand("picard-verify",
                                  "semiconjugacy + exact node identities at (0,0,0,4)");
  c_pv->add_option("--word", pv_word)->required();
  c_pv->add_option("--samples", pv_samples);
  c_pv->add_option("--seed", pv_seed);

  // fixed-points --------------------------------------------------------------
  ParamsOpt fp_p;
  std::string fp_word;
  NewtonStrategy fp_st;
  auto* c_fp = app.add_subcommand("fixed-points", "Newton search for fixed points");
  add_params_flags(c_fp, fp_p);
  c_fp->add_option("--word", fp_word)->required();
  c_fp->add_option("--grid", fp_st.grid_n);
  c_fp->add_option("--box", fp_st.box);
  c_fp->add_option("--random", fp_st.random_complex);
  c_fp->add_option("--torus-grid", fp_st.torus_grid);
  c_fp->add_option("--seed", fp_st.seed);

  // property-p ----------------------------------------------------------------
  ParamsOpt pp_p;
  int pp_maxlen = 6;
  NewtonStrategy pp_st;
  auto* c_pp = app.add_subcommand("property-p",
                                  "flag hyperbolic fixed points with near-interval trace");
  add_params_flags(c_pp, pp_p);
  c_pp->add_option("--maxlen", pp_maxlen);
  c_pp->add_option("--grid", pp_st.grid_n);
  c_pp->add_option("--random", pp_st.random_complex);
  c_pp->add_option("--seed", pp_st.seed);

  // scan ----------------------------------------------------------------------
  RunConfig scfg;
  bool scan_resume = false, scan_serial = false;
  auto* c_scan = app.add_subcommand("scan", "parameter-slice survey to JSONL");
  c_scan->add_option("--family", scfg.family)
      ->check(CLI::IsMember({"dm", "markoff", "picard", "torus"}));
  c_scan->add_option("--a-min", scfg.a_min);
  c_scan->add_option("--a-max", scfg.a_max);
  c_scan->add_option("--cells-a", scfg.cells_a);
  c_scan->add_option("--perturb-min", scfg.perturb_min);
  c_scan->add_option("--perturb-max", scfg.perturb_max);
  c_scan->add_option("--cells-b", scfg.cells_b);
  c_scan->add_option("--depth", scfg.depth);
  c_scan->add_option("--levels", scfg.levels);
  c_scan->add_option("--samples", scfg.samples);
  c_scan->add_option("--maxlen", scfg.maxlen);
  c_scan->add_option("--precision", scfg.precision)
      ->check(CLI::IsMember({"double", "dd"}));
  c_scan->add_option("--seed", scfg.seed);
  c_scan->add_flag("--resume", scan_resume, "skip cells already in the output file");
  c_scan->add_flag("--serial", scan_serial);

  // heatmap --------------------------------------------------------------------
  std::string hm_in, hm_field;
  auto* c_hm = app.add_subcommand("heatmap", "render a scan field to a PPM image");
  c_hm->add_option("--in", hm_in, "scan JSONL file")->required();
  c_hm->add_option("--field", hm_field, "dotted record path, e.g. cascade.last_sup")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_classify->parsed()) {
      Word w = Word::parse(word_text);
      ElementClass ec = classify(w);
      json j;
      j["word"] = w.str();
      j["length"] = w.size();
      j["kind"] = kind_name(ec.kind);
      j["conjugator"] = ec.conjugator.str();
      if (w.size() % 2 == 0) {
        j["g_word"] = w.g_str();
        Mat2 m = to_sl2(w);
        j["matrix"] = {m.m11.str(), m.m12.str(), m.m21.str(), m.m22.str()};
        j["trace"] = m.trace().str();
      }
      if (ec.kind == Kind::Hyperbolic && is_cyclically_reduced(w)) {
        auto ia = ind_attr(w);
        j["ind"] = vertex_index(ia.ind) + 1;
        j["attr"] = vertex_index(ia.attr) + 1;
      }
      emit(j, out);
    } else if (c_orbit->parsed()) {
      Params p = orbit_p.resolve();
      auto orb = apply_word_checked(p, Word::parse(orbit_word),
                                    resolve_point(orbit_point), true);
      std::ostringstream csv;
      csv << "step,letter,x_re,x_im,y_re,y_im,z_re,z_im,residual\n";
      for (const auto& s : orb.trace)
        csv << s.step << "," << axis_char(s.letter) << "," << s.point.x.real() << ","
            << s.point.x.imag() << "," << s.point.y.real() << "," << s.point.y.imag()
            << "," << s.point.z.real() << "," << s.point.z.imag() << "," << s.residual
            << "\n";
      if (orb.escaped) csv << "# escaped after " << orb.steps_done << " letters\n";
      emit_text(csv.str(), out);
    } else if (c_fatou->parsed()) {
      Params p = fatou_p.resolve();
      auto cert = certify_monotone_escape(p, resolve_point(fatou_point), fatou_depth,
                                          fatou_serial ? Exec::Serial : Exec::Parallel);
      json j;
      j["status"] = status_name(cert.status);
      j["depth"] = cert.depth;
      if (cert.status == CertStatus::FailedWithWitness)
        j["witness"] = cert.witness_word.str();
      j["min_modulus_by_depth"] = cert.min_modulus_by_depth;
      emit(j, out);
    } else if (c_bq->parsed()) {
      Params p = bq_p.resolve();
      auto rep = bq_orbit_test(p, resolve_point(bq_point), bq_depth);
      json j;
      j["condition1"] = rep.condition1;
      j["condition2_violations"] = rep.condition2_violations;
      j["depth"] = rep.depth;
      j["radius2_heuristic"] = rep.radius2_heuristic;
      emit(j, out);
    } else if (c_casc->parsed()) {
      Params p = casc_p.resolve();
      CommutatorLevel seed;
      C3 center{0.0, 0.0, 0.0};
      json j;
      if (casc_p.family == "dm") {
        DMSeed s = seed_dm(casc_p.a, 0.5);
        seed = s.level;
        center = {casc_p.a, 2.0, 2.0};
        j["dm_k"] = s.k;
      } else {
        seed = seed_markoff();
      }
      auto rep = run_cascade(seed, p, budget_for(casc_eps), center, casc_levels,
                             casc_samples, Exec::Parallel);
      j["epsilon"] = rep.budget.epsilon;
      j["K"] = rep.budget.K;
      j["decay_ok"] = rep.decay_ok;
      j["dd_used"] = rep.dd_used || casc_precision == "dd";
      json levels = json::array();
      for (const auto& lvl : rep.levels) {
        json words = json::array(), sups = json::array();
        for (std::size_t i = 0; i < lvl.elements.size(); ++i) {
          words.push_back(lvl.elements[i].str());
          double d = lvl.measured_sup[i];
          if (casc_precision == "dd")  // forced re-measurement in double-double
            d = measure_sup_deviation(p, lvl.elements[i], center, casc_eps / 2.0,
                                      casc_samples, true);
          sups.push_back(d);
        }
        levels.push_back({{"n", lvl.n},
                          {"budget", rep.budget.K / std::pow(2.0, lvl.n)},
                          {"words", words},
                          {"measured_sup", sups}});
      }
      j["levels"] = levels;
      emit(j, out);
    } else if (c_esc->parsed()) {
      Params p = esc_p.resolve();
      GammaTable g = build_gamma_ij(esc_style == "markoff"
                                        ? GammaStyle::MarkoffCommutators
                                        : GammaStyle::DMCommutators,
                                    esc_k);
      auto cert = escape_cascade(p, g, resolve_point(esc_point), esc_levels);
      json j;
      j["lambda"] = cert.lambda;
      j["log10_dist_q"] = cert.log10_dist_q;
      j["verified_levels"] = cert.verified_levels;
      j["chart_radius"] = cert.chart_radius;
      json entries = json::array();
      for (const auto& e : cert.entries)
        entries.push_back({{"n", e.n},
                           {"vertex", vertex_index(e.vertex) + 1},
                           {"log10_dist", e.log10_dist},
                           {"word_length", e.word_length}});
      j["entries"] = entries;
      emit(j, out);
    } else if (c_pv->parsed()) {
      Word w = Word::parse(pv_word);
      json j;
      j["word"] = w.str();
      j["semiconjugacy_max_residual"] = verify_semiconjugacy(w, pv_samples, pv_seed);
      j["exact_jacobian_identities"] = check_exact_jacobian_identities(w);
      json nodes = json::array();
      for (const C3& c : kCayleyPoints) {
        auto ev = sing_pt_eigenvalues(w, c);
        nodes.push_back({{"point", to_json(c)},
                         {"eigenvalues", {to_json(ev[0]), to_json(ev[1]), to_json(ev[2])}}});
      }
      j["node_eigenvalues"] = nodes;
      emit(j, out);
    } else if (c_fp->parsed()) {
      Params p = fp_p.resolve();
      auto recs = newton_fixed_points(p, Word::parse(fp_word), fp_st);
      std::ostringstream csv;
      csv << "x_re,x_im,y_re,y_im,z_re,z_im,kind,ev1_abs,ev2_abs,map_residual\n";
      for (const auto& r : recs)
        csv << r.point.x.real() << "," << r.point.x.imag() << "," << r.point.y.real()
            << "," << r.point.y.imag() << "," << r.point.z.real() << ","
            << r.point.z.imag() << "," << fp_kind_name(r.kind) << ","
            << std::abs(r.restricted.eigenvalues[0]) << ","
            << std::abs(r.restricted.eigenvalues[1]) << "," << r.map_residual << "\n";
      emit_text(csv.str(), out);
    } else if (c_pp->parsed()) {
      Params p = pp_p.resolve();
      auto recs = property_p_screen(p, pp_maxlen, pp_st);
      std::ostringstream csv;
      csv << "word,x_re,x_im,y_re,y_im,z_re,z_im,restricted_trace_re,restricted_trace_im\n";
      for (const auto& r : recs) {
        cplx tr = r.restricted.matrix2.trace();
        csv << r.word.str() << "," << r.point.x.real() << "," << r.point.x.imag() << ","
            << r.point.y.real() << "," << r.point.y.imag() << "," << r.point.z.real()
            << "," << r.point.z.imag() << "," << tr.real() << "," << tr.imag() << "\n";
      }
      emit_text(csv.str(), out);
    } else if (c_scan->parsed()) {
      if (out.empty()) throw CLI::ValidationError("scan requires --out FILE");
      auto outcome = scan(scfg, out, scan_resume,
                          scan_serial ? Exec::Serial : Exec::Parallel);
      json j;
      j["config_hash"] = scfg.hash();
      j["records_written"] = outcome.records_written;
      j["cells_skipped"] = outcome.cells_skipped;
      j["cells_failed"] = outcome.cells_failed;
      std::cout << j.dump(2) << "\n";
    } else if (c_hm->parsed()) {
      if (out.empty()) throw CLI::ValidationError("heatmap requires --out FILE");
      heatmap(hm_in, hm_field, out);
      std::cout << "wrote " << out << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
