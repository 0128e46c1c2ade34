#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "minkcell/catalog.hpp"
#include "minkcell/cell.hpp"
#include "minkcell/rng.hpp"

using namespace minkcell;
using catalog::cubic_lattice;
using catalog::hexagon;
using catalog::hexagon_tiling_lattice;
using catalog::square;

TEST_CASE("in_D halves the plane between origin and a lattice neighbor") {
  const GaugeBody c0{square()};
  const Vec o(0.0, 0.0), v(2.0, 0.0);
  CHECK(in_D(c0, o, v, Vec(0.9, 0.4)));
  CHECK(in_D(c0, o, v, Vec(1.0, 0.0)));  // the bisector itself is included
  CHECK_FALSE(in_D(c0, o, v, Vec(1.1, 0.0)));
  CHECK(in_D(c0, o, v, Vec(-5.0, 2.0)));
}

TEST_CASE("in_D on the cube") {
  const GaugeBody cube{catalog::cube()};
  const Vec o(0.0, 0.0, 0.0), v(2.0, 0.0, 0.0);
  CHECK(in_D(cube, o, v, Vec(0.9, 0.9, 0.9)));
  CHECK_FALSE(in_D(cube, o, v, Vec(1.1, 0.0, 0.0)));
}

TEST_CASE("covering radius fixtures") {
  CHECK(covering_radius(GaugeBody{square()}, cubic_lattice(2, 2.0)) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(covering_radius(GaugeBody{square()}, cubic_lattice(2, 1.0)) ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(covering_radius(GaugeBody{EuclideanBall{2, 1.0}}, cubic_lattice(2, 1.0)) ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-9));
  CHECK(covering_radius(GaugeBody{hexagon()}, hexagon_tiling_lattice()) ==
        doctest::Approx(1.0).epsilon(1e-9));
  // scaling the lattice scales the radius linearly
  CHECK(covering_radius(GaugeBody{square()}, cubic_lattice(2, 3.0)) ==
        doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("relevant vectors of the square under 2Z^2") {
  const auto rel = relevant_vectors(GaugeBody{square()}, cubic_lattice(2, 2.0));
  CHECK(rel.size() == 8);  // four axis neighbors and four diagonals, all gauge 2
  for (const Vec& v : rel) CHECK(square().gauge(v) == doctest::Approx(2.0));
}

TEST_CASE("exact cells reproduce the classical tiles") {
  // square under 2Z^2: the cell is the body itself
  const StarPolygon sq = minkowski_cell_2d(GaugeBody{square()}, cubic_lattice(2, 2.0));
  CHECK(sq.vertices.size() == 4);
  CHECK(sq.area() == doctest::Approx(4.0).epsilon(1e-12));

  // Euclidean disc under Z^2: the unit square
  const StarPolygon ds = minkowski_cell_2d(GaugeBody{EuclideanBall{2, 1.0}},
                                           cubic_lattice(2, 1.0));
  CHECK(ds.vertices.size() == 4);
  CHECK(ds.area() == doctest::Approx(1.0).epsilon(1e-12));
  for (const Vec& y : ds.vertices) {
    CHECK(std::abs(y.c[0]) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::abs(y.c[1]) == doctest::Approx(0.5).epsilon(1e-9));
  }

  // hexagon under its tiling lattice: the cell is the hexagon, area = det
  const StarPolygon hx = minkowski_cell_2d(GaugeBody{hexagon()}, hexagon_tiling_lattice());
  CHECK(hx.vertices.size() == 6);
  CHECK(hx.area() == doctest::Approx(1.5 * std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("cell area equals the lattice determinant on random pairs") {
  Rng rng(5);
  for (int k = 0; k < 12; ++k) {
    const SymmetricPolytope poly = catalog::random_polygon(4 + 2 * rng.uniform_int(0, 4), rng);
    Mat m;
    m.n = 2;
    const double a = rng.uniform(0.6, 1.0), c = rng.uniform(0.6, 1.0);
    m.set_col(0, Vec(a, 0.0));
    m.set_col(1, Vec(rng.uniform(-0.5 * a, 0.5 * a), c));
    const Lattice lat = Lattice::from_basis(m);
    const StarPolygon cell = minkowski_cell_2d(GaugeBody{poly}, lat);
    CHECK(cell.area() == doctest::Approx(lat.abs_det()).epsilon(1e-10));
  }
}

TEST_CASE("cell membership agrees with the exact cell polygon") {
  const GaugeBody body{hexagon()};
  const Lattice lat = hexagon_tiling_lattice();
  Rng rng(17);
  for (int k = 0; k < 300; ++k) {
    const Vec y(rng.uniform(-1.3, 1.3), rng.uniform(-1.3, 1.3));
    // stay away from the hexagon boundary where membership legitimately flips
    const double g = body.gauge(y);
    if (std::abs(g - 1.0) < 5e-3) continue;
    CHECK(cell_membership(body, lat, y) == (g < 1.0));
  }
}

TEST_CASE("covering radius in 3D via grid certification") {
  const double g = covering_radius(GaugeBody{catalog::cube()}, cubic_lattice(3, 2.0));
  CHECK(g == doctest::Approx(1.0).epsilon(2e-5));
  CHECK(g >= 1.0 - 1e-9);  // never under-reported
}

TEST_CASE("monte carlo cell volume matches the determinant") {
  const McVolume mc =
      cell_volume_mc(GaugeBody{square()}, cubic_lattice(2, 2.0), 400000, 42);
  CHECK(std::abs(mc.volume - 4.0) <= 5.0 * mc.std_error);
  const McVolume mc3 =
      cell_volume_mc(GaugeBody{catalog::cube()}, cubic_lattice(3, 2.0), 400000, 42);
  CHECK(std::abs(mc3.volume - 8.0) <= 5.0 * mc3.std_error + 1e-2);
}

TEST_CASE("tiling verification passes on classical tilings") {
  const TilingReport sq = verify_tiling(GaugeBody{square()}, cubic_lattice(2, 2.0), 4000, 3);
  CHECK(sq.pass);
  CHECK(sq.vol_error <= 1e-9 * 4.0);
  CHECK(sq.coverage_violations == 0);
  CHECK(sq.overlap_violations == 0);

  const TilingReport hx =
      verify_tiling(GaugeBody{hexagon()}, hexagon_tiling_lattice(), 4000, 3);
  CHECK(hx.pass);

  const TilingReport ds =
      verify_tiling(GaugeBody{EuclideanBall{2, 1.0}}, cubic_lattice(2, 1.0), 4000, 3);
  CHECK(ds.pass);
}

TEST_CASE("tiling verification passes on the cube lattice in 3D") {
  const TilingReport rep =
      verify_tiling(GaugeBody{catalog::cube()}, cubic_lattice(3, 2.0), 3000, 9);
  CHECK(rep.pass);
  CHECK(rep.coverage_violations == 0);
  CHECK(rep.overlap_violations == 0);
}

TEST_CASE("segment direction check") {
  const SymmetricPolytope c0 = square();
  CHECK_FALSE(segment_direction_check(c0, {Vec(1.0, 0.0)}));  // edges parallel to e1
  CHECK(segment_direction_check(c0, {Vec(1.0, 0.3)}));
  // the surrogate has facets containing vertical segments: the jump mechanism
  const SymmetricPolytope sur = catalog::bicone_surrogate(16);
  CHECK_FALSE(segment_direction_check(sur, {Vec(0.0, 0.0, 1.0)}));
  // a fine polygon behaves like the disc: no edge parallel to a generic direction
  const SymmetricPolytope fine = catalog::regular_polygon(1000);
  CHECK(segment_direction_check(fine, {Vec(0.3070897351, 0.9516893927)}));
}

TEST_CASE("linear images of cells agree with cells of linear images") {
  // tau = ((2,1),(0,1)): compare membership of tau(y) in M(tau C, tau L)
  const SymmetricPolytope c1 = catalog::family_body(1);
  const Lattice lat = cubic_lattice(2, 2.0);
  Mat tb;
  tb.n = 2;
  tb.set_col(0, Vec(2.0, 0.0));
  tb.set_col(1, Vec(1.0, 1.0));
  std::vector<Vec> tv;
  for (const Vec& v : c1.vertices) tv.push_back(tb.apply(v));
  const SymmetricPolytope tc = SymmetricPolytope::from_vertices_2d(tv);
  Mat lb;
  lb.n = 2;
  lb.set_col(0, tb.apply(lat.basis.col(0)));
  lb.set_col(1, tb.apply(lat.basis.col(1)));
  const Lattice tlat = Lattice::from_basis(lb);

  Rng rng(23);
  int checked = 0;
  for (int k = 0; k < 400; ++k) {
    const Vec y(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    const bool a = cell_membership(GaugeBody{c1}, lat, y, 1e-9);
    const bool b = cell_membership(GaugeBody{c1}, lat, y, -1e-7);
    if (a != b) continue;  // within the boundary band, skip
    CHECK(cell_membership(GaugeBody{tc}, tlat, tb.apply(y), 1e-8) == a);
    ++checked;
  }
  CHECK(checked > 300);
}
