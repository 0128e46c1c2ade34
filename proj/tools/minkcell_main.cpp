#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minkcell/bisector.hpp"
#include "minkcell/catalog.hpp"
#include "minkcell/cell.hpp"
#include "minkcell/covering.hpp"
#include "minkcell/json_io.hpp"
#include "minkcell/rng.hpp"
#include "minkcell/svg.hpp"

namespace mk = minkcell;
using mk::Json;
using mk::Vec;

namespace {

Vec parse_point(const std::string& s) {
  std::vector<double> xs;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      xs.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw mk::SchemaError("cannot parse coordinate \"" + tok + "\" in \"" + s + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (xs.size() < 2 || xs.size() > static_cast<size_t>(mk::kMaxDim))
    throw mk::SchemaError("point \"" + s + "\" must have 2 to 4 coordinates");
  Vec v = Vec::zero(static_cast<int>(xs.size()));
  for (size_t k = 0; k < xs.size(); ++k) v.c[k] = xs[k];
  return v;
}

uint64_t effective_seed(uint64_t flag_seed) {
  if (const char* env = std::getenv("MINKCELL_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return static_cast<uint64_t>(v);
    throw mk::SchemaError("MINKCELL_SEED must be an unsigned integer");
  }
  return flag_seed;
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (int k = 0; k < v.dim; ++k) a.push_back(v.c[k]);
  return a;
}

Json chain_json(const mk::PLChain& chain) {
  Json j;
  j["schema"] = mk::kSchemaTag;
  j["kind"] = "bisector_chain";
  j["p"] = vec_json(chain.p);
  j["q"] = vec_json(chain.q);
  j["piece_count"] = mk::piece_count(chain);
  j["segment_count"] = chain.segment_count();
  Json bps = Json::array();
  for (const Vec& b : chain.breakpoints) bps.push_back(vec_json(b));
  j["breakpoints"] = bps;
  j["head_ray"] = Json{{"anchor", vec_json(chain.head_ray.anchor)},
                       {"dir", vec_json(chain.head_ray.dir)}};
  j["tail_ray"] = Json{{"anchor", vec_json(chain.tail_ray.anchor)},
                       {"dir", vec_json(chain.tail_ray.dir)}};
  return j;
}

// closed outline of the body for figures (2D projection for nD bodies)
std::vector<Vec> body_outline(const mk::GaugeBody& body, double scale) {
  std::vector<Vec> pts;
  if (body.is_polytope() && body.dim() == 2 && !body.poly().vertices.empty()) {
    for (const Vec& v : body.poly().vertices) pts.push_back(scale * v);
  } else {
    for (int k = 0; k <= 128; ++k) {
      const double th = 2.0 * 3.14159265358979323846 * k / 128.0;
      Vec u = Vec::zero(body.dim());
      u.c[0] = std::cos(th);
      u.c[1] = std::sin(th);
      const double g = body.gauge(u);
      pts.push_back(Vec((scale / g) * u.c[0], (scale / g) * u.c[1]));
    }
    return pts;
  }
  pts.push_back(pts.front());
  return pts;
}

std::vector<Vec> chain_polyline(const mk::PLChain& chain, double window) {
  std::vector<Vec> pts;
  const Vec h = chain.scan_dir;
  auto s_of = [&](const Vec& w) { return mk::dot(w, h); };
  std::vector<double> ss = {-window};
  for (const Vec& b : chain.breakpoints) ss.push_back(s_of(b));
  ss.push_back(window);
  for (const double s : ss) pts.push_back(chain.point_at(s));
  return pts;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int cmd_bisector(const std::string& body_path, const std::string& p_str,
                 const std::string& q_str, const std::string& svg_path) {
  const mk::GaugeBody body = mk::parse_body(mk::load_json_file(body_path));
  const Vec p = parse_point(p_str), q = parse_point(q_str);
  const mk::PLChain chain = mk::bisector_2d_exact(body, p, q);
  std::cout << chain_json(chain).dump(2) << "\n";
  if (!svg_path.empty()) {
    mk::SvgScene scene;
    const double lam = 0.5 * body.gauge(q - p);
    std::vector<Vec> lp = body_outline(body, lam), lq = lp;
    for (Vec& v : lp) v = v + p;
    for (Vec& v : lq) v = v + q;
    scene.add_polygon("body", lp, "#888888");
    scene.add_polygon("body", lq, "#888888");
    const double window = 3.0 * (mk::norm(q - p) + body.circumradius());
    scene.add_polyline("cell", chain_polyline(chain, window), "#3366cc");
    for (const Vec& b : chain.breakpoints) scene.add_point("lattice", b, 0.03 * window, "#222222");
    scene.write(svg_path);
  }
  return 0;
}

Json tiling_json(const mk::TilingReport& rep) {
  Json j;
  j["schema"] = mk::kSchemaTag;
  j["kind"] = "tiling_report";
  j["pass"] = rep.pass;
  j["volume"] = rep.volume;
  j["vol_error"] = rep.vol_error;
  j["coverage_violations"] = rep.coverage_violations;
  j["overlap_violations"] = rep.overlap_violations;
  Json ws = Json::array();
  for (const Vec& w : rep.witnesses) ws.push_back(vec_json(w));
  j["witnesses"] = ws;
  return j;
}

int cmd_cell(const std::string& body_path, const std::string& lat_path, int samples,
             uint64_t seed, const std::string& svg_path) {
  const mk::GaugeBody body = mk::parse_body(mk::load_json_file(body_path));
  const mk::Lattice lat = mk::parse_lattice(mk::load_json_file(lat_path));
  const double gamma = mk::covering_radius(body, lat);
  const auto rel = mk::relevant_vectors(body, lat);
  Json j;
  j["schema"] = mk::kSchemaTag;
  j["kind"] = "minkowski_cell";
  j["gamma"] = gamma;
  j["relevant_count"] = rel.size();
  j["det"] = lat.abs_det();
  const bool exact = body.dim() == 2 && (body.is_polytope() || body.is_ball());
  mk::StarPolygon cell;
  if (exact) {
    cell = mk::minkowski_cell_2d(body, lat);
    Json vs = Json::array();
    for (const Vec& v : cell.vertices) vs.push_back(vec_json(v));
    j["vertices"] = vs;
    j["volume"] = cell.area();
  } else {
    const mk::McVolume mc = mk::cell_volume_mc(body, lat, std::max(samples, 100000), seed);
    j["mc_volume"] = mc.volume;
    j["mc_std_error"] = mc.std_error;
  }
  j["tiling"] = tiling_json(mk::verify_tiling(body, lat, samples, seed));
  std::cout << j.dump(2) << "\n";
  if (!svg_path.empty()) {
    mk::SvgScene scene;
    scene.add_polygon("body", body_outline(body, gamma), "#888888");
    if (exact) {
      std::vector<Vec> cp = cell.vertices;
      if (!cp.empty()) cp.push_back(cp.front());
      scene.add_polygon("cell", cp, "#cc3333");
    }
    for (const Vec& v : rel)
      scene.add_point("lattice", Vec(v.c[0], v.c[1]), 0.04 * body.circumradius(), "#222222");
    scene.write(svg_path);
  }
  return 0;
}

int cmd_tile(const std::string& body_path, const std::string& lat_path, int samples,
             uint64_t seed) {
  const mk::GaugeBody body = mk::parse_body(mk::load_json_file(body_path));
  const mk::Lattice lat = mk::parse_lattice(mk::load_json_file(lat_path));
  std::cout << tiling_json(mk::verify_tiling(body, lat, samples, seed)).dump(2) << "\n";
  return 0;
}

Json param_json(const mk::LatticeParam2D& p) {
  return Json{{"a", p.a}, {"b", p.b}, {"c", p.c}};
}

int cmd_optimize(const std::string& body_path, const std::string& lat_path, int starts,
                 uint64_t seed, double tol, const std::string& svg_path) {
  const mk::GaugeBody body = mk::parse_body(mk::load_json_file(body_path));
  if (!lat_path.empty()) {
    // evaluate a given lattice instead of searching
    const mk::Lattice lat = mk::parse_lattice(mk::load_json_file(lat_path));
    if (!mk::feasibility(body, lat)) {
      std::cerr << "infeasible: covering radius exceeds 1\n";
      return 3;
    }
    Json j;
    j["schema"] = mk::kSchemaTag;
    j["kind"] = "density_report";
    j["density"] = mk::density(body, lat);
    j["gamma"] = mk::covering_radius(body, lat);
    j["feasible"] = true;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  mk::OptimizeConfig cfg;
  cfg.starts = starts;
  cfg.seed = seed;
  cfg.tol = tol;
  const mk::OptimizationReport rep = mk::optimize(body, cfg);
  Json j;
  j["schema"] = mk::kSchemaTag;
  j["kind"] = "optimize_report";
  j["density"] = rep.density;
  j["gamma"] = rep.gamma;
  j["feasible"] = rep.feasible;
  j["best"] = param_json(rep.best);
  Json tr = Json::array();
  for (const auto& [idx, dens] : rep.trace) tr.push_back(Json::array({idx, dens}));
  j["trace"] = tr;
  std::cout << j.dump(2) << "\n";
  if (!svg_path.empty()) {
    const mk::Lattice lat = rep.best.to_lattice();
    const mk::StarPolygon cell = mk::minkowski_cell_2d(body, lat);
    mk::SvgScene scene;
    scene.add_polygon("body", body_outline(body, 1.0), "#888888");
    std::vector<Vec> cp = cell.vertices;
    if (!cp.empty()) cp.push_back(cp.front());
    scene.add_polygon("cell", cp, "#cc3333");
    for (const Vec& v : mk::relevant_vectors(body, lat))
      scene.add_point("lattice", v, 0.04, "#222222");
    scene.write(svg_path);
  }
  return 0;
}

std::string benchmark_tsv(const std::vector<mk::BenchmarkRow>& rows) {
  char buf[256];
  std::string out = "body\tdensity\treference\tgap\tgamma\ta\tb\tc\n";
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\n",
                  r.body.c_str(), r.density, r.reference, r.gap, r.gamma, r.best.a, r.best.b,
                  r.best.c);
    out += buf;
  }
  return out;
}

int cmd_benchmark(uint64_t seed, int starts, const std::string& json_path,
                  const std::string& tsv_path, const std::string& svg_path) {
  const auto rows = mk::benchmark_suite(seed, starts);
  Json j;
  j["schema"] = mk::kSchemaTag;
  j["kind"] = "benchmark";
  Json arr = Json::array();
  for (const auto& r : rows) {
    // runtime_sec goes to stderr only, so the artifacts stay reproducible
    std::cerr << "benchmark " << r.body << ": " << r.runtime_sec << " s\n";
    Json row;
    row["body"] = r.body;
    row["density"] = r.density;
    row["reference"] = r.reference;
    row["gap"] = r.gap;
    row["gamma"] = r.gamma;
    row["best"] = param_json(r.best);
    arr.push_back(row);
  }
  j["rows"] = arr;
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!json_path.empty()) write_text(json_path, text);
  if (!tsv_path.empty()) write_text(tsv_path, benchmark_tsv(rows));
  if (!svg_path.empty()) {
    mk::SvgScene scene;
    const std::vector<mk::SymmetricPolytope> bodies = {
        mk::catalog::square(), mk::catalog::hexagon(), mk::catalog::regular_polygon(8),
        mk::catalog::regular_polygon(16), mk::catalog::regular_polygon(64)};
    for (size_t i = 0; i < rows.size(); ++i) {
      const Vec off(3.0 * static_cast<double>(i), 0.0);
      std::vector<Vec> bp;
      for (const Vec& v : bodies[i].vertices) bp.push_back(v + off);
      bp.push_back(bp.front());
      scene.add_polygon("body", bp, "#888888");
      const mk::StarPolygon cell =
          mk::minkowski_cell_2d(mk::GaugeBody{bodies[i]}, rows[i].best.to_lattice());
      std::vector<Vec> cp;
      for (const Vec& v : cell.vertices) cp.push_back(v + off);
      cp.push_back(cp.front());
      scene.add_polygon("cell", cp, "#cc3333");
    }
    scene.write(svg_path);
  }
  return 0;
}

int cmd_examples(int which, int i, const std::string& svg_path) {
  if (which == 1) {
    const mk::GaugeBody body{mk::catalog::bicone_example()};
    const Vec p(0.0, 0.0, 0.0), q(0.0, 0.0, 1.0);
    Json j;
    j["schema"] = mk::kSchemaTag;
    j["kind"] = "bicone_probe_report";
    j["apex"] = vec_json(body.bicone().apex);
    Json probes = Json::array();
    mk::SvgScene scene;
    for (const double x : {0.5, 1.5, 2.0, 3.0}) {
      auto path = [x](double u) { return Vec(x, -0.6 + 1.2 * u, 0.0); };
      const auto jumps = mk::continuity_probe(body, p, q, path, 1001);
      Json pj;
      pj["x"] = x;
      pj["predicted_jump"] = x > 1.0 ? 0.5 * (x - 1.0) : 0.0;
      Json js = Json::array();
      for (const auto& jm : jumps)
        js.push_back(Json{{"location", vec_json(jm.location)}, {"magnitude", jm.magnitude}});
      pj["jumps"] = js;
      probes.push_back(pj);
      if (!svg_path.empty()) {
        // midpoint height along the walk, as a (y, z) curve per column
        std::vector<Vec> curve;
        for (int k = 0; k < 401; ++k) {
          const Vec xk = path(static_cast<double>(k) / 400.0);
          const Vec w = mk::midpoint_map(body, p, q, xk);
          curve.push_back(Vec(xk.c[1], w.c[2]));
        }
        scene.add_polyline("cell", curve, "#3366cc");
        for (const auto& jm : jumps)
          scene.add_point("lattice", Vec(jm.location.c[1], 1.0), 0.02, "#cc3333");
      }
    }
    j["probes"] = probes;
    std::cout << j.dump(2) << "\n";
    if (!svg_path.empty()) scene.write(svg_path);
    return 0;
  }
  if (which == 2) {
    const mk::SymmetricPolytope ci = mk::catalog::family_body(i);
    const Vec p(0.0, 0.0), q(0.0, 2.0);
    const mk::PLChain chain = mk::bisector_2d_exact(mk::GaugeBody{ci}, p, q);
    Json j = chain_json(chain);
    j["kind"] = "family_bisector";
    j["i"] = i;
    double err = 0.0;
    for (int k = 0; k <= 1000; ++k) {
      const double x = -3.0 + 6.0 * k / 1000.0;
      const Vec w = chain.point_at(-x);  // scan coordinate s = <w, rot90(d)/|d|> = -x
      err = std::max(err, std::abs(w.c[1] - mk::catalog::family_formula(i, x)));
    }
    j["max_formula_error"] = err;
    std::cout << j.dump(2) << "\n";
    if (!svg_path.empty()) {
      mk::SvgScene scene;
      std::vector<Vec> bp = ci.vertices;
      bp.push_back(bp.front());
      scene.add_polygon("body", bp, "#888888");
      scene.add_polyline("cell", chain_polyline(chain, 3.0), "#3366cc");
      for (const Vec& b : chain.breakpoints) scene.add_point("lattice", b, 0.05, "#222222");
      scene.write(svg_path);
    }
    return 0;
  }
  throw mk::SchemaError("examples: --which must be 1 or 2");
}

int run(int argc, char** argv) {
  CLI::App app{"Minkowski-norm bisectors, cells and lattice coverings"};
  app.require_subcommand(1);

  std::string body_path, lat_path, p_str = "0,0", q_str = "0,2", svg_path;
  std::string json_path, tsv_path;
  int samples = 10000, starts = 32, which = 1, fam_i = 2;
  uint64_t seed = 0;
  double tol = 1e-10;

  CLI::App* bis = app.add_subcommand("bisector", "exact planar bisector of two sites");
  bis->add_option("--body", body_path, "body JSON path")->required();
  bis->add_option("--p", p_str, "first site, comma-separated");
  bis->add_option("--q", q_str, "second site, comma-separated");
  bis->add_option("--svg", svg_path, "optional SVG overlay path");

  CLI::App* cel = app.add_subcommand("cell", "Minkowski cell of a lattice");
  cel->add_option("--body", body_path, "body JSON path")->required();
  cel->add_option("--lattice", lat_path, "lattice JSON path")->required();
  cel->add_option("--samples", samples, "probe count");
  cel->add_option("--seed", seed, "RNG seed");
  cel->add_option("--svg", svg_path, "optional SVG path");

  CLI::App* til = app.add_subcommand("tile", "verify the cell tiles by the lattice");
  til->add_option("--body", body_path, "body JSON path")->required();
  til->add_option("--lattice", lat_path, "lattice JSON path")->required();
  til->add_option("--samples", samples, "probe count");
  til->add_option("--seed", seed, "RNG seed");

  CLI::App* opt = app.add_subcommand("optimize", "search for the thinnest lattice covering");
  opt->add_option("--body", body_path, "body JSON path")->required();
  opt->add_option("--lattice", lat_path, "evaluate this lattice instead of searching");
  opt->add_option("--starts", starts, "multi-start count");
  opt->add_option("--seed", seed, "RNG seed");
  opt->add_option("--tol", tol, "simplex stop tolerance");
  opt->add_option("--svg", svg_path, "optional SVG path");

  CLI::App* ben = app.add_subcommand("benchmark", "optimize the standard body suite");
  ben->add_option("--seed", seed, "RNG seed");
  ben->add_option("--starts", starts, "multi-start count");
  ben->add_option("--json", json_path, "write the JSON table here");
  ben->add_option("--tsv", tsv_path, "write the TSV table here");
  ben->add_option("--svg", svg_path, "write the figure here");

  CLI::App* exa = app.add_subcommand("examples", "regenerate the worked examples");
  exa->add_option("--which", which, "1 = bicone probes, 2 = polygon family")->required();
  exa->add_option("--i", fam_i, "family index for --which 2");
  exa->add_option("--svg", svg_path, "optional SVG path");

  CLI11_PARSE(app, argc, argv);
  seed = effective_seed(seed);

  if (bis->parsed()) return cmd_bisector(body_path, p_str, q_str, svg_path);
  if (cel->parsed()) return cmd_cell(body_path, lat_path, samples, seed, svg_path);
  if (til->parsed()) return cmd_tile(body_path, lat_path, samples, seed);
  if (opt->parsed()) return cmd_optimize(body_path, lat_path, starts, seed, tol, svg_path);
  if (ben->parsed()) return cmd_benchmark(seed, starts, json_path, tsv_path, svg_path);
  return cmd_examples(which, fam_i, svg_path);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mk::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 1;
  } catch (const mk::GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
