#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "minkcell/body.hpp"
#include "minkcell/catalog.hpp"
#include "minkcell/rng.hpp"

using namespace minkcell;
using catalog::family_body;
using catalog::square;

TEST_CASE("gauge of the square is the max norm") {
  const GaugeBody c0{square()};
  CHECK(c0.gauge(Vec(2.0, 1.0)) == doctest::Approx(2.0));
  CHECK(c0.gauge(Vec(0.0, 0.0)) == 0.0);
  CHECK(c0.gauge(Vec(-0.3, 0.1)) == doctest::Approx(0.3));
  CHECK(minkowski_distance(c0, Vec(1.0, 1.0), Vec(3.0, 2.0)) == doctest::Approx(2.0));
}

TEST_CASE("gauge is symmetric and positively homogeneous") {
  Rng rng(41);
  const GaugeBody bodies[] = {GaugeBody{family_body(3)}, GaugeBody{catalog::bicone_example()},
                              GaugeBody{EuclideanBall{2, 1.5}}};
  for (const GaugeBody& b : bodies)
    for (int k = 0; k < 200; ++k) {
      Vec x = Vec::zero(b.dim());
      for (int i = 0; i < b.dim(); ++i) x.c[i] = rng.uniform(-2.0, 2.0);
      const double g = b.gauge(x);
      CHECK(b.gauge(-x) == doctest::Approx(g).epsilon(1e-12));
      const double lam = rng.uniform(0.1, 3.0);
      CHECK(b.gauge(lam * x) == doctest::Approx(lam * g).epsilon(1e-12));
    }
}

TEST_CASE("vertex constructor canonicalizes and validates") {
  // C1 = conv{(1,1),(1,0),(0,-1)} and antipodes; gauge of a vertex is 1
  const SymmetricPolytope c1 = family_body(1);
  CHECK(c1.vertices.size() == 6);
  CHECK(c1.gauge(Vec(1.0, 1.0)) == doctest::Approx(1.0));
  CHECK(c1.gauge(Vec(0.0, -1.0)) == doctest::Approx(1.0));

  CHECK_THROWS_AS(SymmetricPolytope::from_vertices_2d(
                      {Vec(1.0, 0.0), Vec(0.0, 1.0), Vec(-1.0, 0.0)}),
                  GeometryError);  // odd count breaks symmetry
  CHECK_THROWS_AS(SymmetricPolytope::from_vertices_2d(
                      {Vec(1.0, 0.0), Vec(0.0, 1.0), Vec(-1.0, 0.1), Vec(0.0, -1.0)}),
                  GeometryError);  // no antipode for (1,0)
}

TEST_CASE("square facets are the four axis normals") {
  const SymmetricPolytope c0 = square();
  CHECK(c0.facets.size() == 4);
  for (const Vec& a : c0.facets) {
    CHECK(std::abs(a.c[0]) + std::abs(a.c[1]) == doctest::Approx(1.0));
    // offset-1 normalization: the supporting value over the body is 1
    double support = 0.0;
    for (const Vec& v : c0.vertices) support = std::max(support, dot(a, v));
    CHECK(support == doctest::Approx(1.0));
  }
  CHECK(c0.kappa() == doctest::Approx(1.0));
  CHECK(c0.circumradius() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("facet constructor matches the vertex form") {
  const SymmetricPolytope cube = catalog::cube();
  CHECK(cube.dim == 3);
  CHECK(cube.gauge(Vec(0.2, -0.9, 0.4)) == doctest::Approx(0.9));
  const SymmetricPolytope octa = catalog::octahedron();
  CHECK(octa.gauge(Vec(0.5, 0.25, 0.25)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(SymmetricPolytope::from_facets(2, {Vec(1.0, 0.0), Vec(0.0, 1.0)}),
                  GeometryError);  // not closed under negation
}

TEST_CASE("hausdorff distance of the family to its limit") {
  // delta(C_2, C_0) = 1/sqrt(5): the square corner (1,-1) against the edge
  // from (1,0) to (1/2,-1)
  const double d = hausdorff_distance(GaugeBody{family_body(2)}, GaugeBody{square()});
  CHECK(d == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
  // the family converges to the square in the Hausdorff metric
  double prev = d;
  for (int i = 3; i <= 40; i *= 2) {
    const double di = hausdorff_distance(GaugeBody{family_body(i)}, GaugeBody{square()});
    CHECK(di < prev);
    prev = di;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("bicone gauge closed form") {
  const DiscBicone b = catalog::bicone_example();  // apex (1,0,1)
  CHECK(b.gauge(Vec(1.0, 0.0, 1.0)) == doctest::Approx(1.0));
  CHECK(b.gauge(Vec(0.0, 0.0, 1.0)) == doctest::Approx(2.0));
  CHECK(b.gauge(Vec(0.5, 0.0, 0.0)) == doctest::Approx(0.5));
  CHECK(b.gauge(Vec(-1.0, 0.0, -1.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(DiscBicone::with_apex(Vec(1.0, 0.0, 0.0)), GeometryError);
  // apex below the disc is folded up
  const DiscBicone f = DiscBicone::with_apex(Vec(0.5, 0.0, -2.0));
  CHECK(f.apex.z() == doctest::Approx(2.0));
}

TEST_CASE("decompose splits off the segment direction") {
  const Decomposition dec = decompose(Vec(0.0, 0.0), Vec(0.0, 1.0), Vec(3.0, 2.0));
  CHECK(dec.t == doctest::Approx(2.0));
  CHECK(dec.x.c[0] == doctest::Approx(3.0));
  CHECK(dec.x.c[1] == doctest::Approx(0.0));
  CHECK_THROWS_AS(decompose(Vec(1.0, 1.0), Vec(1.0, 1.0), Vec(0.0, 0.0)), GeometryError);
}

TEST_CASE("lattice point enumeration") {
  const Lattice z2 = catalog::cubic_lattice(2, 1.0);
  const GaugeBody c0{square()};
  CHECK(lattice_points_in_ball(z2, c0, 1.0).size() == 8);
  CHECK(lattice_points_in_ball(catalog::cubic_lattice(2, 2.0), c0, 1.0).empty());
  const GaugeBody disc{EuclideanBall{2, 1.0}};
  CHECK(lattice_points_in_ball(z2, disc, 1.5).size() == 8);
  // deterministic order: re-run gives the same list
  const auto a = lattice_points_in_ball(z2, disc, 2.5);
  const auto b = lattice_points_in_ball(z2, disc, 2.5);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(close(a[i], b[i], 0.0));
}

TEST_CASE("lattice constructor rejects singular bases") {
  Mat m;
  m.n = 2;
  m.set_col(0, Vec(1.0, 2.0));
  m.set_col(1, Vec(2.0, 4.0));
  CHECK_THROWS_AS(Lattice::from_basis(m), GeometryError);
  const Lattice hex = catalog::hexagon_tiling_lattice();
  CHECK(hex.abs_det() == doctest::Approx(1.5 * std::sqrt(3.0)));
}

TEST_CASE("triangle inequality holds for the polygon gauge") {
  Rng rng(7);
  const GaugeBody body{family_body(4)};
  for (int k = 0; k < 500; ++k) {
    const Vec x(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    const Vec y(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    CHECK(body.gauge(x + y) <= body.gauge(x) + body.gauge(y) + 1e-12);
  }
}
