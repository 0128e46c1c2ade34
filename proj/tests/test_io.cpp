#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "minkcell/catalog.hpp"
#include "minkcell/json_io.hpp"
#include "minkcell/rng.hpp"
#include "minkcell/svg.hpp"

using namespace minkcell;

namespace {

size_t count_occurrences(const std::string& hay, const std::string& needle) {
  size_t n = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_CASE("body JSON round-trips through its schema") {
  Rng rng(3);
  const GaugeBody bodies[] = {
      GaugeBody{catalog::square()}, GaugeBody{catalog::family_body(3)},
      GaugeBody{catalog::octahedron()}, GaugeBody{EuclideanBall{3, 2.5}},
      GaugeBody{catalog::bicone_example()}};
  for (const GaugeBody& body : bodies) {
    const GaugeBody back = parse_body(body_to_json(body));
    REQUIRE(back.dim() == body.dim());
    for (int k = 0; k < 100; ++k) {
      Vec x = Vec::zero(body.dim());
      for (int i = 0; i < body.dim(); ++i) x.c[i] = rng.uniform(-2.0, 2.0);
      CHECK(back.gauge(x) == doctest::Approx(body.gauge(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("lattice JSON rows are basis vectors") {
  const Json j = {{"schema", kSchemaTag}, {"basis", {{2.0, 0.0}, {1.0, 3.0}}}};
  const Lattice lat = parse_lattice(j);
  CHECK(lat.abs_det() == doctest::Approx(6.0));
  CHECK(lat.basis.col(1).c[0] == doctest::Approx(1.0));
  CHECK(lat.basis.col(1).c[1] == doctest::Approx(3.0));
  const Json back = lattice_to_json(lat);
  CHECK(back.at("basis") == j.at("basis"));
}

TEST_CASE("schema violations are rejected") {
  Json ok;
  ok["schema"] = kSchemaTag;
  ok["dim"] = 2;
  ok["kind"] = "ball";
  ok["radius"] = 1.0;
  CHECK(parse_body(ok).is_ball());

  Json unknown = ok;
  unknown["extra"] = 1;
  CHECK_THROWS_AS(parse_body(unknown), SchemaError);

  Json wrong_tag = ok;
  wrong_tag["schema"] = "minkcell/2";
  CHECK_THROWS_AS(parse_body(wrong_tag), SchemaError);

  Json no_dim = ok;
  no_dim.erase("dim");
  CHECK_THROWS_AS(parse_body(no_dim), SchemaError);

  Json bad_kind = ok;
  bad_kind["kind"] = "simplex";
  CHECK_THROWS_AS(parse_body(bad_kind), SchemaError);

  Json mixed = ok;
  mixed["kind"] = "polytope";
  mixed["vertices"] = {{1.0, 0.0}, {-1.0, 0.0}};
  CHECK_THROWS_AS(parse_body(mixed), SchemaError);  // radius does not apply

  // geometric violations surface as GeometryError, not SchemaError
  Json asym;
  asym["schema"] = kSchemaTag;
  asym["dim"] = 2;
  asym["kind"] = "polytope";
  asym["vertices"] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.1}, {0.0, -1.0}};
  CHECK_THROWS_AS(parse_body(asym), GeometryError);

  Json bad_lat = {{"schema", kSchemaTag}, {"basis", {{1.0, 0.0}, {2.0, 0.0}}}};
  CHECK_THROWS_AS(parse_lattice(bad_lat), GeometryError);  // singular
  Json ragged = {{"schema", kSchemaTag}, {"basis", {{1.0, 0.0}, {0.0, 1.0, 2.0}}}};
  CHECK_THROWS_AS(parse_lattice(ragged), SchemaError);
}

TEST_CASE("missing files raise schema errors") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/body.json"), SchemaError);
}

TEST_CASE("svg output is deterministic") {
  SvgScene scene;
  scene.add_polygon("body", {Vec(-1.0, -1.0), Vec(1.0, -1.0), Vec(1.0, 1.0), Vec(-1.0, 1.0),
                             Vec(-1.0, -1.0)},
                    "#888888");
  scene.add_point("lattice", Vec(0.5, 0.25), 0.05, "#222222");
  const std::string a = scene.render();
  const std::string b = scene.render();
  CHECK(a == b);
  CHECK(count_occurrences(a, "<g ") == 3);
}

TEST_CASE("empty scene renders a frame only") {
  const SvgScene scene;
  const std::string svg = scene.render();
  CHECK(count_occurrences(svg, "<svg") == 1);
  CHECK(count_occurrences(svg, "<polygon") == 0);
  CHECK(count_occurrences(svg, "</svg>") == 1);
}

TEST_CASE("the square cell figure has three layers and thirteen elements") {
  // square body, its cell under 2Z^2, and the 8 relevant vectors
  SvgScene scene;
  const std::vector<Vec> sq = {Vec(1.0, 1.0), Vec(-1.0, 1.0), Vec(-1.0, -1.0), Vec(1.0, -1.0),
                               Vec(1.0, 1.0)};
  scene.add_polygon("body", sq, "#888888");
  scene.add_polygon("cell", sq, "#cc3333");
  for (const double x : {-2.0, 0.0, 2.0})
    for (const double y : {-2.0, 0.0, 2.0}) {
      if (x == 0.0 && y == 0.0) continue;
      scene.add_point("lattice", Vec(x, y), 0.05, "#222222");
    }
  const std::string svg = scene.render();
  const size_t elements = count_occurrences(svg, "<g ") + count_occurrences(svg, "<polygon") +
                          count_occurrences(svg, "<circle");
  CHECK(count_occurrences(svg, "<g ") == 3);
  CHECK(elements == 13);
}
