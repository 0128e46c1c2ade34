#pragma once

#include <vector>

#include "minkcell/bisector.hpp"
#include "minkcell/body.hpp"

namespace minkcell {

// Centrally symmetric star region around the origin, CCW vertex list.
struct StarPolygon {
  std::vector<Vec> vertices;
  double area() const;  // shoelace
};

// True iff y lies in the closed star region D(body, p, q) of points at least
// as close to p as to q: decompose y and test t <= mid + eps.
bool in_D(const GaugeBody& body, const Vec& p, const Vec& q, const Vec& y, double eps = 1e-9);

// Smallest gamma with gamma*C + Lambda covering. 2D: exact, via the vertices
// of the Minkowski cell built from a bootstrap superset of relevant vectors.
// nD: bisection with grid-certified coverage (resolution doubling under a
// cell-count budget); verdicts are safe-side, so the radius is never
// under-reported: a witness or an exhausted budget both count as not covered.
double covering_radius(const GaugeBody& body, const Lattice& lat);

// Exactly { v in Lambda \ {o} : gauge(v) <= 2*gamma*(1+1e-6) }.
std::vector<Vec> relevant_vectors(const GaugeBody& body, const Lattice& lat);

// Exact 2D Minkowski cell: intersection of D(body, o, v) over relevant v.
// Vertices are chain breakpoints and chain-chain intersection points that
// survive membership in every D, sorted CCW.
StarPolygon minkowski_cell_2d(const GaugeBody& body, const Lattice& lat);

// Conjunction of in_D over the relevant vectors (any dimension).
bool cell_membership(const GaugeBody& body, const Lattice& lat, const Vec& y,
                     double eps = 1e-9);

// Shoelace area of a star polygon.
double cell_volume(const StarPolygon& cell);

// Monte Carlo volume of the nD cell inside the gamma*C bounding region.
struct McVolume {
  double volume = 0.0;
  double std_error = 0.0;
};
McVolume cell_volume_mc(const GaugeBody& body, const Lattice& lat, long long samples,
                        uint64_t seed);

struct TilingReport {
  bool pass = false;
  double volume = 0.0;       // vol(M): exact in 2D, MC in nD
  double vol_error = 0.0;    // |vol - det|
  int coverage_violations = 0;
  int overlap_violations = 0;
  std::vector<Vec> witnesses;  // up to 8 violating probe points
};

// Tiling verification: volume match plus coverage/overlap probing of
// `samples` random fundamental-domain points (probes within eps of a bisector
// are excluded from the overlap test).
TilingReport verify_tiling(const GaugeBody& body, const Lattice& lat, int samples,
                           uint64_t seed = 0);

// True iff no facet (edge in 2D) of the polytope contains a segment parallel
// to any of the given directions: <n(F), d> = 0 test per facet.
bool segment_direction_check(const SymmetricPolytope& poly, const std::vector<Vec>& dirs,
                             double eps = 1e-9);

}  // namespace minkcell
