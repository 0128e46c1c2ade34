#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "minkcell/vec.hpp"

namespace minkcell {

// Thrown when an input violates a geometric precondition (as opposed to a
// malformed file, which is a schema error). The CLI maps this to exit code 2.
struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Origin-symmetric convex polytope.
//
// 2D bodies are built from vertices (canonical order: counterclockwise,
// starting from the vertex with maximal atan2 angle, ties broken
// lexicographically) and carry derived facets. Bodies in dimension >= 3 are
// built from facet functionals only; vertices are not enumerated.
// Facets are stored as outward normals a with the body equal to
// {x : <a,x> <= 1 for all facets} (offsets normalized to 1).
struct SymmetricPolytope {
  int dim = 2;
  std::vector<Vec> vertices;  // 2D only, canonical CCW; empty for dim >= 3
  std::vector<Vec> facets;    // offset-1 outward normals, in -a pairs

  static SymmetricPolytope from_vertices_2d(std::vector<Vec> verts, double eps = 1e-9);
  static SymmetricPolytope from_facets(int dim, std::vector<Vec> normals, double eps = 1e-9);

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int facet_count() const { return static_cast<int>(facets.size()); }

  // max_i <a_i, x>; zero only at the origin.
  double gauge(const Vec& x) const {
    double g = 0.0;
    for (const Vec& a : facets) {
      double v = dot(a, x);
      if (v > g) g = v;
    }
    return g;
  }

  // Euclidean radius R with body contained in the R-ball (exact in 2D).
  double circumradius() const;
  // max of the gauge over the Euclidean unit sphere (exact: max facet norm).
  double kappa() const;
};

struct EuclideanBall {
  int dim = 2;
  double radius = 1.0;
  double gauge(const Vec& x) const { return norm(x) / radius; }
};

// conv{v, unit disc in the z=0 plane, -v} with apex v (v_z > 0 after
// normalization). Gauge is closed-form from the cone cross-sections:
// for z >= 0 the height-z slice of r*C is the disc of radius r - z/v_z
// centered at (z/v_z) * (v_x, v_y).
struct DiscBicone {
  Vec apex = Vec(1.0, 0.0, 1.0);

  static DiscBicone with_apex(const Vec& v) {
    if (v.dim != 3) throw GeometryError("DiscBicone: apex must be 3D");
    if (std::abs(v.c[2]) < 1e-12) throw GeometryError("DiscBicone: apex must lie off the disc plane");
    DiscBicone b;
    b.apex = (v.c[2] > 0) ? v : -v;
    return b;
  }

  double gauge(const Vec& x) const {
    const double vz = apex.c[2];
    double px = x.c[0], py = x.c[1], pz = x.c[2];
    if (pz < 0) {
      px = -px;
      py = -py;
      pz = -pz;
    }
    const double t = pz / vz;
    const double dx = px - t * apex.c[0];
    const double dy = py - t * apex.c[1];
    return t + std::sqrt(dx * dx + dy * dy);
  }

  // Membership of x in r*C via the two-cone decomposition; retained as the
  // independent check for the closed-form gauge.
  bool contains_scaled(const Vec& x, double r) const {
    if (r <= 0.0) return norm2(x) == 0.0;
    const double vz = apex.c[2];
    double px = x.c[0], py = x.c[1], pz = x.c[2];
    if (pz < 0) {
      px = -px;
      py = -py;
      pz = -pz;
    }
    if (pz > r * vz) return false;
    const double t = pz / vz;  // apex coefficient times r
    const double dx = px - t * apex.c[0];
    const double dy = py - t * apex.c[1];
    return std::sqrt(dx * dx + dy * dy) <= r - t;
  }

  double circumradius() const { return std::max(norm(apex), 1.0); }
  double kappa() const;
};

// Body given by a boundary-radial evaluator r(u) for unit directions u;
// gauge(x) = |x| / r(x/|x|). Bounds must be supplied by the caller.
struct CustomBody {
  int dim = 2;
  std::function<double(const Vec&)> radial;
  double circumradius_bound = 1.0;  // r(u) <= this for all u
  double kappa_bound = 1.0;         // 1/r(u) <= this for all u

  double gauge(const Vec& x) const {
    double n = norm(x);
    if (n == 0.0) return 0.0;
    return n / radial((1.0 / n) * x);
  }
};

struct GaugeBody {
  std::variant<SymmetricPolytope, EuclideanBall, DiscBicone, CustomBody> v;

  GaugeBody(SymmetricPolytope p) : v(std::move(p)) {}
  GaugeBody(EuclideanBall b) : v(b) {}
  GaugeBody(DiscBicone b) : v(b) {}
  GaugeBody(CustomBody b) : v(std::move(b)) {}

  int dim() const;
  double gauge(const Vec& x) const;
  double circumradius() const;
  double kappa() const;

  bool is_polytope() const { return std::holds_alternative<SymmetricPolytope>(v); }
  bool is_ball() const { return std::holds_alternative<EuclideanBall>(v); }
  const SymmetricPolytope& poly() const { return std::get<SymmetricPolytope>(v); }
  const EuclideanBall& ball() const { return std::get<EuclideanBall>(v); }
  const DiscBicone& bicone() const { return std::get<DiscBicone>(v); }
};

// Full-rank lattice with cached determinant and inverse basis.
struct Lattice {
  Mat basis;  // columns are basis vectors
  Mat inv;
  double determinant = 1.0;  // signed
  int dim = 2;

  static Lattice from_basis(const Mat& b);
  Vec point(const Vec& z) const { return basis.apply(z); }  // integer coords in, point out
  double abs_det() const { return std::abs(determinant); }
};

// Orthogonal split of y against the segment direction d = q - p:
// y = x + t*d with x in the hyperplane H(p,q) = {<y,d> = 0} through the origin.
struct Decomposition {
  Vec x;
  double t;
};

Decomposition decompose(const Vec& p, const Vec& q, const Vec& y);

double gauge(const GaugeBody& body, const Vec& x);
// Gauge distance from x to y (translation-invariant, symmetric for these bodies).
double minkowski_distance(const GaugeBody& body, const Vec& x, const Vec& y);

// Hausdorff distance; exact for 2D polytope/ball combinations.
double hausdorff_distance(const GaugeBody& a, const GaugeBody& b);

// All nonzero v in the lattice with gauge(v) <= r, deterministically ordered.
std::vector<Vec> lattice_points_in_ball(const Lattice& lat, const GaugeBody& body, double r);

// Euclidean distance from a point to a convex polygon (0 inside).
double point_to_polygon_distance(const Vec& p, const std::vector<Vec>& poly);

}  // namespace minkcell
