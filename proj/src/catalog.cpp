#include "minkcell/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace minkcell {
namespace catalog {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Andrew monotone chain, popping near-collinear triples so the result feeds
// the strict-convexity polygon constructor cleanly.
std::vector<Vec> convex_hull(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    if (a.c[0] != b.c[0]) return a.c[0] < b.c[0];
    return a.c[1] < b.c[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec& a, const Vec& b) {
                          return a.c[0] == b.c[0] && a.c[1] == b.c[1];
                        }),
            pts.end());
  const int n = static_cast<int>(pts.size());
  if (n < 3) return pts;
  std::vector<Vec> h(2 * n + 1);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 1e-7) --k;
    h[k++] = pts[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 1e-7) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

SymmetricPolytope square() {
  return SymmetricPolytope::from_vertices_2d(
      {Vec(1.0, 1.0), Vec(-1.0, 1.0), Vec(-1.0, -1.0), Vec(1.0, -1.0)});
}

SymmetricPolytope regular_polygon(int m, double circumradius) {
  if (m < 4 || m % 2 != 0)
    throw std::invalid_argument("regular_polygon: m must be even and >= 4");
  std::vector<Vec> verts(m);
  for (int k = 0; k < m / 2; ++k) {
    const double th = 2.0 * kPi * k / m;
    verts[k] = Vec(circumradius * std::cos(th), circumradius * std::sin(th));
    verts[k + m / 2] = -verts[k];  // exact antipode, not a recomputed cosine
  }
  return SymmetricPolytope::from_vertices_2d(verts);
}

SymmetricPolytope hexagon() { return regular_polygon(6); }

SymmetricPolytope family_body(int i) {
  if (i < 1) throw std::invalid_argument("family_body: index must be >= 1");
  const Vec a(1.0, 1.0), b(1.0, 0.0), c(1.0 - 1.0 / i, -1.0);
  return SymmetricPolytope::from_vertices_2d({a, b, c, -a, -b, -c});
}

SymmetricPolytope family_limit() { return square(); }

double family_formula(int i, double x) {
  if (i < 1) throw std::invalid_argument("family_formula: index must be >= 1");
  const double di = i;
  if (x <= -2.0 || x >= 2.0) return 0.5 * x + 1.0;
  const double inner = 1.0 - 1.0 / di;
  if (x <= -inner) return di / (di + 1.0) * (x + 2.0);
  if (x >= inner) return di / (di + 1.0) * x + 2.0 / (di + 1.0);
  return 1.0;
}

DiscBicone bicone_example() { return DiscBicone::with_apex(Vec(1.0, 0.0, 1.0)); }

SymmetricPolytope bicone_surrogate(int k) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("bicone_surrogate: k must be even and >= 4");
  const Vec apex(1.0, 0.0, 1.0);
  std::vector<Vec> normals;
  normals.reserve(2 * k);
  for (int j = 0; j < k; ++j) {
    const double t0 = 2.0 * kPi * j / k;
    const double t1 = 2.0 * kPi * (j + 1) / k;
    const Vec u0(std::cos(t0), std::sin(t0), 0.0);
    const Vec u1(std::cos(t1), std::sin(t1), 0.0);
    Vec n = cross3(u0 - apex, u1 - apex);
    const double off = dot(n, apex);
    if (std::abs(off) < 1e-12) throw std::logic_error("bicone_surrogate: degenerate facet");
    n = (1.0 / off) * n;
    normals.push_back(n);
    normals.push_back(-n);
  }
  return SymmetricPolytope::from_facets(3, normals);
}

SymmetricPolytope cube() {
  return SymmetricPolytope::from_facets(
      3, {Vec(1, 0, 0), Vec(-1, 0, 0), Vec(0, 1, 0), Vec(0, -1, 0), Vec(0, 0, 1),
          Vec(0, 0, -1)});
}

SymmetricPolytope octahedron() {
  std::vector<Vec> normals;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) normals.push_back(Vec(sx, sy, sz));
  return SymmetricPolytope::from_facets(3, normals);
}

Lattice cubic_lattice(int dim, double step) {
  check_dim(dim, "cubic_lattice");
  if (step <= 0.0) throw GeometryError("cubic_lattice: step must be positive");
  Mat b = Mat::identity(dim);
  for (int i = 0; i < dim; ++i) b.m[i][i] = step;
  return Lattice::from_basis(b);
}

Lattice hexagon_tiling_lattice() {
  Mat b;
  b.n = 2;
  b.set_col(0, Vec(1.5, 0.5 * std::sqrt(3.0)));
  b.set_col(1, Vec(0.0, std::sqrt(3.0)));
  return Lattice::from_basis(b);
}

Lattice disc_covering_lattice() { return hexagon_tiling_lattice(); }

SymmetricPolytope random_polygon(int m, Rng& rng) {
  if (m < 4 || m % 2 != 0)
    throw std::invalid_argument("random_polygon: m must be even and >= 4");
  // vertices on a random ellipse are in convex position by construction, so
  // the hull always has exactly m vertices and no rejection loop is needed
  const int half = m / 2;
  const double om = rng.uniform(0.0, kPi);
  const double ecc = rng.uniform(0.45, 1.0);
  const double co = std::cos(om), so = std::sin(om);
  std::vector<Vec> pts;
  pts.reserve(m);
  for (int i = 0; i < half; ++i) {
    const double ph = kPi * (i + rng.uniform(0.12, 0.88)) / half;
    const double u = std::cos(ph), w = ecc * std::sin(ph);
    pts.push_back(Vec(co * u - so * w, so * u + co * w));
  }
  for (int i = 0; i < half; ++i) pts.push_back(-pts[i]);
  return SymmetricPolytope::from_vertices_2d(pts);
}

}  // namespace catalog
}  // namespace minkcell
