#include "minkcell/body.hpp"

#include <algorithm>
#include <cmath>

namespace minkcell {

namespace {

double scale_of(const std::vector<Vec>& pts) {
  double s = 1.0;
  for (const Vec& p : pts) s = std::max(s, norm(p));
  return s;
}

bool has_negation(const std::vector<Vec>& pts, const Vec& v, double eps) {
  for (const Vec& p : pts)
    if (close(p, -v, eps)) return true;
  return false;
}

}  // namespace

SymmetricPolytope SymmetricPolytope::from_vertices_2d(std::vector<Vec> verts, double eps) {
  if (verts.size() < 4 || verts.size() % 2 != 0)
    throw GeometryError("polytope: a symmetric polygon needs an even vertex count >= 4");
  for (const Vec& v : verts)
    if (v.dim != 2) throw GeometryError("polytope: 2D vertex form requires 2D points");
  const double tol = eps * scale_of(verts);
  for (const Vec& v : verts)
    if (!has_negation(verts, v, tol))
      throw GeometryError("polytope: central symmetry violated, missing -v for a vertex");

  // Canonical order: CCW by angle, starting at maximal angle (lex tie-break).
  std::sort(verts.begin(), verts.end(), [](const Vec& a, const Vec& b) {
    double ta = std::atan2(a.c[1], a.c[0]);
    double tb = std::atan2(b.c[1], b.c[0]);
    if (ta != tb) return ta < tb;
    if (a.c[0] != b.c[0]) return a.c[0] < b.c[0];
    return a.c[1] < b.c[1];
  });
  std::rotate(verts.begin(), verts.end() - 1, verts.end());  // start at maximal angle

  const int m = static_cast<int>(verts.size());
  for (int k = 0; k < m; ++k) {
    const Vec& a = verts[k];
    const Vec& b = verts[(k + 1) % m];
    const Vec& c = verts[(k + 2) % m];
    if (cross2(b - a, c - b) <= tol * tol)
      throw GeometryError("polytope: vertices must be in strictly convex position");
  }

  SymmetricPolytope p;
  p.dim = 2;
  p.vertices = std::move(verts);
  p.facets.reserve(m);
  for (int k = 0; k < m; ++k) {
    const Vec& a = p.vertices[k];
    const Vec& b = p.vertices[(k + 1) % m];
    Vec e = b - a;
    Vec n(e.c[1], -e.c[0]);  // outward for CCW order
    double off = dot(n, a);
    if (off <= 0.0) throw GeometryError("polytope: origin must be interior");
    p.facets.push_back((1.0 / off) * n);
  }
  return p;
}

SymmetricPolytope SymmetricPolytope::from_facets(int dim, std::vector<Vec> normals, double eps) {
  check_dim(dim, "polytope");
  if (normals.size() < 2u * dim || normals.size() % 2 != 0)
    throw GeometryError("polytope: a bounded symmetric body needs >= 2*dim facets in -a pairs");
  for (const Vec& a : normals) {
    if (a.dim != dim) throw GeometryError("polytope: facet dimension mismatch");
    if (norm(a) < eps) throw GeometryError("polytope: zero facet normal");
  }
  const double tol = eps * scale_of(normals);
  for (const Vec& a : normals)
    if (!has_negation(normals, a, tol))
      throw GeometryError("polytope: central symmetry violated, missing -a for a facet");

  SymmetricPolytope p;
  p.dim = dim;
  p.facets = std::move(normals);
  // Boundedness: the normals must span; circumradius() throws on a singular pivot set.
  p.circumradius();
  return p;
}

double SymmetricPolytope::circumradius() const {
  if (dim == 2 && !vertices.empty()) {
    double r = 0.0;
    for (const Vec& v : vertices) r = std::max(r, norm(v));
    return r;
  }
  // Greedy pivot selection of dim independent normals M; the body lies in
  // {|<a_i,x>| <= 1, i in M}, so |x| <= sqrt(dim) * ||M^-1||_F.
  Mat m;
  m.n = dim;
  std::vector<int> used;
  std::vector<Vec> basis;
  for (int k = 0; k < dim; ++k) {
    int best = -1;
    double best_score = 0.0;
    for (int i = 0; i < facet_count(); ++i) {
      if (std::find(used.begin(), used.end(), i) != used.end()) continue;
      Vec r = facets[i];  // residual after removing span of chosen rows
      for (const Vec& b : basis) r = r - (dot(r, b) / norm2(b)) * b;
      double s = norm(r);
      if (s > best_score) {
        best_score = s;
        best = i;
      }
    }
    if (best < 0 || best_score < 1e-12)
      throw GeometryError("polytope: facet normals do not span, body unbounded");
    used.push_back(best);
    basis.push_back(facets[best]);
    for (const Vec& b0 : basis) (void)b0;
  }
  for (int k = 0; k < dim; ++k)
    for (int j = 0; j < dim; ++j) m.m[k][j] = facets[used[k]].c[j];
  Mat mi = inverse(m);
  double fro2 = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) fro2 += mi.m[i][j] * mi.m[i][j];
  return std::sqrt(static_cast<double>(dim) * fro2);
}

double SymmetricPolytope::kappa() const {
  double k = 0.0;
  for (const Vec& a : facets) k = std::max(k, norm(a));
  return k;
}

double DiscBicone::kappa() const {
  // 1 / inradius, via the exact gauge on a dense direction sweep plus a
  // conservative 0.1% inflation; only used as a certification margin.
  double worst = 0.0;
  const int N = 4096;
  for (int i = 0; i < N; ++i) {
    double th = M_PI * (i + 0.5) / N;  // z >= 0 half suffices by symmetry
    for (int j = 0; j < 64; ++j) {
      double ph = 2.0 * M_PI * j / 64;
      Vec u(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
      worst = std::max(worst, gauge(u));
    }
  }
  return worst * 1.001;
}

int GaugeBody::dim() const {
  return std::visit(
      [](const auto& b) -> int {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, DiscBicone>)
          return 3;
        else
          return b.dim;
      },
      v);
}

double GaugeBody::gauge(const Vec& x) const {
  if (x.dim != dim()) throw std::invalid_argument("gauge: dimension mismatch");
  return std::visit([&](const auto& b) { return b.gauge(x); }, v);
}

double GaugeBody::circumradius() const {
  return std::visit(
      [](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, EuclideanBall>)
          return b.radius;
        else if constexpr (std::is_same_v<T, CustomBody>)
          return b.circumradius_bound;
        else
          return b.circumradius();
      },
      v);
}

double GaugeBody::kappa() const {
  return std::visit(
      [](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, EuclideanBall>)
          return 1.0 / b.radius;
        else if constexpr (std::is_same_v<T, CustomBody>)
          return b.kappa_bound;
        else
          return b.kappa();
      },
      v);
}

Lattice Lattice::from_basis(const Mat& b) {
  Lattice l;
  l.basis = b;
  l.dim = b.n;
  l.determinant = det(b);
  double scale = 0.0;
  for (int j = 0; j < b.n; ++j) scale = std::max(scale, norm(b.col(j)));
  if (std::abs(l.determinant) < 1e-12 * std::pow(scale, b.n))
    throw GeometryError("lattice: basis is singular or nearly singular");
  l.inv = inverse(b);
  return l;
}

Decomposition decompose(const Vec& p, const Vec& q, const Vec& y) {
  check_same_dim(p, q, "decompose");
  check_same_dim(p, y, "decompose");
  Vec d = q - p;
  double dd = norm2(d);
  if (dd == 0.0) throw GeometryError("decompose: p and q must be distinct");
  Decomposition r;
  r.t = dot(y, d) / dd;
  r.x = y - r.t * d;
  return r;
}

double gauge(const GaugeBody& body, const Vec& x) { return body.gauge(x); }

double minkowski_distance(const GaugeBody& body, const Vec& x, const Vec& y) {
  return body.gauge(y - x);
}

double point_to_polygon_distance(const Vec& p, const std::vector<Vec>& poly) {
  const int m = static_cast<int>(poly.size());
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < m; ++k) {
    const Vec& a = poly[k];
    const Vec& b = poly[(k + 1) % m];
    Vec e = b - a;
    if (cross2(e, p - a) < 0.0) inside = false;
    double t = dot(p - a, e) / norm2(e);
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, norm(p - (a + t * e)));
  }
  return inside ? 0.0 : best;
}

namespace {

// sup over the unit circle of |support(a) - support(b)| for 2D convex bodies,
// via the extreme-point characterization: sup_{x in A} d(x, B) is attained at
// an extreme point of A.
double directed_hausdorff_2d(const GaugeBody& a, const GaugeBody& b) {
  if (a.is_polytope() && b.is_polytope()) {
    double best = 0.0;
    for (const Vec& v : a.poly().vertices)
      best = std::max(best, point_to_polygon_distance(v, b.poly().vertices));
    return best;
  }
  if (a.is_polytope() && b.is_ball()) {
    double best = 0.0;
    for (const Vec& v : a.poly().vertices) best = std::max(best, std::max(0.0, norm(v) - b.ball().radius));
    return best;
  }
  if (a.is_ball() && b.is_polytope()) {
    // farthest sphere point from the polygon lies along a direction where the
    // polygon's support is minimal (an edge-normal direction) or any vertex
    // direction; check both candidate families.
    const double r = a.ball().radius;
    double best = 0.0;
    for (const Vec& n : b.poly().facets) {
      Vec u = normalized(n);
      best = std::max(best, point_to_polygon_distance(r * u, b.poly().vertices));
    }
    for (const Vec& v : b.poly().vertices) {
      Vec u = normalized(v);
      best = std::max(best, point_to_polygon_distance(r * u, b.poly().vertices));
    }
    return best;
  }
  if (a.is_ball() && b.is_ball()) return std::max(0.0, a.ball().radius - b.ball().radius);
  throw GeometryError("hausdorff_distance: supported for 2D polytopes and balls only");
}

}  // namespace

double hausdorff_distance(const GaugeBody& a, const GaugeBody& b) {
  if (a.dim() != b.dim()) throw GeometryError("hausdorff_distance: dimension mismatch");
  if (a.dim() != 2) throw GeometryError("hausdorff_distance: supported in 2D only");
  return std::max(directed_hausdorff_2d(a, b), directed_hausdorff_2d(b, a));
}

std::vector<Vec> lattice_points_in_ball(const Lattice& lat, const GaugeBody& body, double r) {
  if (lat.dim != body.dim()) throw GeometryError("lattice_points_in_ball: dimension mismatch");
  if (r < 0.0) throw GeometryError("lattice_points_in_ball: radius must be nonnegative");
  const double reach = r * body.circumradius();
  const int n = lat.dim;
  int bound[kMaxDim];
  for (int i = 0; i < n; ++i) {
    double row_norm = norm(lat.inv.row(i));
    bound[i] = static_cast<int>(std::floor(row_norm * reach + 1e-9)) + 1;
  }
  std::vector<Vec> out;
  Vec z = Vec::zero(n);
  int idx[kMaxDim];
  for (int i = 0; i < n; ++i) idx[i] = -bound[i];
  while (true) {
    bool all_zero = true;
    for (int i = 0; i < n; ++i) {
      z.c[i] = idx[i];
      if (idx[i] != 0) all_zero = false;
    }
    if (!all_zero) {
      Vec v = lat.point(z);
      if (body.gauge(v) <= r) out.push_back(v);
    }
    int k = 0;
    while (k < n && ++idx[k] > bound[k]) {
      idx[k] = -bound[k];
      ++k;
    }
    if (k == n) break;
  }
  std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
    for (int i = 0; i < a.dim; ++i)
      if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
  });
  return out;
}

}  // namespace minkcell
