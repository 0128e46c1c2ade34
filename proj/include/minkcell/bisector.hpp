#pragma once

#include <functional>
#include <vector>

#include "minkcell/body.hpp"

namespace minkcell {

// Equidistance set S along the line {x + t(q-p)}: a closed interval [t_lo, t_hi]
// in units of q-p (often a single point). For polytopes the facet indices active
// at each endpoint are recorded (p-side, q-side); -1 for non-polytope bodies.
struct SInterval {
  double t_lo = 0.0, t_hi = 0.0;
  int lo_p = -1, lo_q = -1;
  int hi_p = -1, hi_q = -1;
  double mid() const { return 0.5 * (t_lo + t_hi); }
  bool is_point(double eps = 1e-9) const { return t_hi - t_lo <= eps; }
};

// Requires p != q and <x, q-p> = 0 within eps (x lives in the hyperplane H
// through the origin). Exact two-piece linear solve for polytopes, closed form
// for balls, bracketed bisection otherwise.
SInterval s_interval(const GaugeBody& body, const Vec& p, const Vec& q, const Vec& x,
                     double eps = 1e-9);

// Middle point of S: x + mid * (q-p). Equidistant from p and q.
Vec midpoint_map(const GaugeBody& body, const Vec& p, const Vec& q, const Vec& x,
                 double eps = 1e-9);

struct Ray {
  Vec anchor;
  Vec dir;  // unit direction, pointing away from the chain
};

// Piecewise-linear bisector in the plane: two infinite rays joined by bounded
// segments between consecutive breakpoints. With k breakpoints the chain has
// k+1 structural segments (k=0 means a full line through the rays' anchor).
// keep_flags[j] marks whether breakpoint j separates distinct active facet
// pairs of the construction (it always does; kept for diagnostics).
struct PLChain {
  Vec p, q;                      // the sites
  Vec scan_dir;                  // unit vector perpendicular to q-p (the graph axis)
  std::vector<Vec> breakpoints;  // ordered along the scan direction
  Ray head_ray, tail_ray;
  int segment_count() const { return static_cast<int>(breakpoints.size()) + 1; }
  // Direction of structural segment k (k = 0 is the head ray reversed so all
  // directions agree with the scan orientation).
  Vec segment_dir(int k) const;
  // Maximal collinear runs: adjacent segments merge when their directions
  // agree within ang_eps radians.
  int merged_piece_count(double ang_eps = 1e-7) const;
  // A point on the chain at scan parameter s (projection onto the scan axis).
  Vec point_at(double s) const;
};

// Exact 2D bisector of a polygon or ball gauge. The chain is a graph over the
// axis perpendicular to q-p; breakpoints are the vertex-passage events of the
// growth construction, computed by exact line intersections.
PLChain bisector_2d_exact(const GaugeBody& body, const Vec& p, const Vec& q,
                          double eps = 1e-9);

// Number of maximal collinear pieces of the chain (1e-7 rad merge).
int piece_count(const PLChain& chain, double ang_eps = 1e-7);

// Sign classes of <n(F), q-p> over the facets.
struct FacetClassification {
  std::vector<int> minus, zero, plus;
};

FacetClassification classify_facets(const SymmetricPolytope& poly, const Vec& p, const Vec& q,
                                    double eps = 1e-9);

// generic = |minus|*|plus| (the bound off the measure-zero direction set);
// worst = m^2/4 + m^3/27.
struct PieceBound {
  long long generic = 0;
  double worst = 0.0;
};

PieceBound piece_bound(int m, const FacetClassification& cls);

// Chord of the body over v (a point of H, <v, q-p> = 0) in direction q-p:
// v_star = v + mu_max (q-p), v_prime = v + mu_min (q-p), h = mu_max - mu_min.
struct HeightProfile {
  Vec v_star, v_prime;
  double h = 0.0;
};

HeightProfile height_profile(const SymmetricPolytope& poly, const Vec& p, const Vec& q,
                             const Vec& v, double eps = 1e-9);

// Similar-triangles closed form for the midpoint over alpha*v, valid for
// alpha >= 1/h(v): p + alpha*v_star - (alpha*h - 1)/2 * (q-p).
Vec midpoint_closed_form(const SymmetricPolytope& poly, const Vec& p, const Vec& q,
                         double alpha, const Vec& v, double eps = 1e-9);

struct Jump {
  Vec location;      // path point at the flagged gap
  double magnitude;  // largest consecutive-image distance in the merged run
};

// Walks midpoint_map along path(u), u in [0,1] sampled at `samples` points,
// and flags consecutive image distances exceeding 10 * step * (local Lipschitz
// estimate over the previous 10 steps). Adjacent flagged gaps merge into one
// reported jump.
std::vector<Jump> continuity_probe(const GaugeBody& body, const Vec& p, const Vec& q,
                                   const std::function<Vec(double)>& path, int samples);

// Maximum vertical deviation between each family member's bisector and the
// limit body's bisector over |s| <= window (sampled densely).
std::vector<double> convergence_deviation(const std::vector<GaugeBody>& family,
                                          const GaugeBody& limit_body, const Vec& p,
                                          const Vec& q, double window);

}  // namespace minkcell
