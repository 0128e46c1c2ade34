#include "minkcell/bisector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "midline.hpp"

namespace minkcell {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_sites(const Vec& p, const Vec& q, const char* where) {
  check_same_dim(p, q, where);
  if (norm2(q - p) == 0.0)
    throw GeometryError(std::string(where) + ": sites p and q must be distinct");
}

void check_in_hyperplane(const Vec& x, const Vec& d, double eps, const char* where) {
  check_same_dim(x, d, where);
  if (std::abs(dot(x, d)) > eps * (1.0 + norm(x)) * norm(d))
    throw GeometryError(std::string(where) + ": x must lie in the hyperplane H(p,q)");
}

// Exact interval for a polytope gauge. Along y(t) = x + t*d the two distance
// functions are upper envelopes of lines, A_i + B_i*t and C_j + B_j*t with
// A_i = <a_i, x-p>, C_j = <a_j, x-q>, B_i = <a_i, d>. The sublevel region
// {phi_p <= phi_q} is the union over j of
//   T_j = {t : (B_i - B_j) t <= C_j - A_i for all i},
// so t_hi is the largest upper end over the nonempty T_j; t_lo mirrors with
// the roles of the sites swapped. The binding facet pair at each end is the
// recorded signature.
SInterval s_interval_polytope(const SymmetricPolytope& poly, const Vec& p, const Vec& q,
                              const Vec& x) {
  const Vec d = q - p;
  const int m = poly.facet_count();
  std::vector<double> A(m), B(m), C(m);
  for (int i = 0; i < m; ++i) {
    const Vec& a = poly.facets[i];
    const double ax = dot(a, x);
    A[i] = ax - dot(a, p);
    C[i] = ax - dot(a, q);
    B[i] = dot(a, d);
  }

  SInterval out;
  double best_hi = -kInf;
  for (int j = 0; j < m; ++j) {
    double lo = -kInf, hi = kInf;
    int arg = -1;
    bool empty = false;
    for (int i = 0; i < m; ++i) {
      const double sl = B[i] - B[j];
      const double rhs = C[j] - A[i];
      if (sl > 0.0) {
        const double t = rhs / sl;
        if (t < hi) {
          hi = t;
          arg = i;
        }
      } else if (sl < 0.0) {
        const double t = rhs / sl;
        if (t > lo) lo = t;
      } else if (rhs < -1e-12 * (1.0 + std::abs(A[i]) + std::abs(C[j]))) {
        // parallel pair: reject only a decisive violation, as rhs is an
        // exact zero up to rounding when facet i is the plateau facet
        empty = true;
        break;
      }
    }
    if (empty || hi == kInf) continue;
    if (lo > hi + 1e-12 * (1.0 + std::abs(lo) + std::abs(hi))) continue;
    if (hi > best_hi) {
      best_hi = hi;
      out.hi_p = arg;
      out.hi_q = j;
    }
  }

  double best_lo = kInf;
  for (int i = 0; i < m; ++i) {
    double lo = -kInf, hi = kInf;
    int arg = -1;
    bool empty = false;
    for (int j = 0; j < m; ++j) {
      const double sl = B[j] - B[i];
      const double rhs = A[i] - C[j];
      if (sl > 0.0) {
        const double t = rhs / sl;
        if (t < hi) hi = t;
      } else if (sl < 0.0) {
        const double t = rhs / sl;
        if (t > lo) {
          lo = t;
          arg = j;
        }
      } else if (rhs < -1e-12 * (1.0 + std::abs(A[i]) + std::abs(C[j]))) {
        empty = true;
        break;
      }
    }
    if (empty || lo == -kInf) continue;
    if (lo > hi + 1e-12 * (1.0 + std::abs(lo) + std::abs(hi))) continue;
    if (lo < best_lo) {
      best_lo = lo;
      out.lo_p = i;
      out.lo_q = arg;
    }
  }

  if (out.hi_q < 0 || out.lo_p < 0)
    throw std::logic_error("s_interval: equidistance interval not found");
  if (best_lo > best_hi) best_lo = best_hi = 0.5 * (best_lo + best_hi);
  out.t_lo = best_lo;
  out.t_hi = best_hi;
  return out;
}

// Euclidean gauge: single point, independent of the radius.
SInterval s_interval_ball(const Vec& p, const Vec& q, const Vec& x) {
  const Vec d = q - p;
  SInterval out;
  out.t_lo = out.t_hi = (norm2(x - q) - norm2(x - p)) / (2.0 * norm2(d));
  return out;
}

// General gauges: bracket the sign change of g(t) = phi_p - phi_q, then expand
// to the interval ends. On the equidistance set g sits at the rounding noise
// floor, strictly outside it beyond the ends.
SInterval s_interval_numeric(const GaugeBody& body, const Vec& p, const Vec& q, const Vec& x) {
  const Vec d = q - p;
  auto g = [&](double t) {
    const Vec y = x + t * d;
    return body.gauge(y - p) - body.gauge(y - q);
  };
  const double reach = 2.0 + 2.0 * (body.gauge(x - p) + body.gauge(x - q)) / body.gauge(d);
  double a = -reach, b = reach;
  for (int k = 0; k < 60 && g(a) >= 0.0; ++k) a *= 2.0;
  for (int k = 0; k < 60 && g(b) <= 0.0; ++k) b *= 2.0;
  if (g(a) >= 0.0 || g(b) <= 0.0)
    throw std::logic_error("s_interval: failed to bracket the equidistance set");
  double lo = a, hi = b;
  for (int k = 0; k < 120; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double root = 0.5 * (lo + hi);
  const Vec yr = x + root * d;
  const double gtol = 1e-13 * (1.0 + body.gauge(yr - p) + body.gauge(yr - q));

  double hi_in = root, hi_out = b;
  while (g(hi_out) <= gtol) {
    hi_in = hi_out;
    hi_out *= 2.0;
    if (hi_out > 1e12) throw std::logic_error("s_interval: unbounded equidistance set");
  }
  for (int k = 0; k < 120; ++k) {
    const double mid = 0.5 * (hi_in + hi_out);
    if (g(mid) <= gtol)
      hi_in = mid;
    else
      hi_out = mid;
  }
  double lo_in = root, lo_out = a;
  while (g(lo_out) >= -gtol) {
    lo_in = lo_out;
    lo_out *= 2.0;
    if (lo_out < -1e12) throw std::logic_error("s_interval: unbounded equidistance set");
  }
  for (int k = 0; k < 120; ++k) {
    const double mid = 0.5 * (lo_in + lo_out);
    if (g(mid) >= -gtol)
      lo_in = mid;
    else
      lo_out = mid;
  }
  SInterval out;
  out.t_lo = std::min(lo_in, hi_in);
  out.t_hi = std::max(lo_in, hi_in);
  return out;
}

struct LineCoef {
  double alpha = 0.0, beta = 0.0;
};

// Exact midline for a fixed signature: each interval end solves
// A_i(s) + B_i t = C_j(s) + B_j t with A_i(s) = <a_i, hhat> s - <a_i, p>,
// which is linear in s; the midline averages the two ends.
LineCoef line_from_signature(const SymmetricPolytope& poly, const Vec& p, const Vec& q,
                             const Vec& hhat, const SInterval& sig) {
  const Vec d = q - p;
  auto endpoint = [&](int i, int j, double& c0, double& c1) {
    const Vec& ai = poly.facets[i];
    const Vec& aj = poly.facets[j];
    const double den = dot(ai, d) - dot(aj, d);
    c1 = (dot(aj, hhat) - dot(ai, hhat)) / den;
    c0 = (dot(ai, p) - dot(aj, q)) / den;
  };
  double l0, l1, h0, h1;
  endpoint(sig.lo_p, sig.lo_q, l0, l1);
  endpoint(sig.hi_p, sig.hi_q, h0, h1);
  return {0.5 * (l0 + h0), 0.5 * (l1 + h1)};
}

bool same_signature(const SInterval& a, const SInterval& b) {
  return a.lo_p == b.lo_p && a.lo_q == b.lo_q && a.hi_p == b.hi_p && a.hi_q == b.hi_q;
}

void sort_dedupe(std::vector<double>& vals) {
  std::sort(vals.begin(), vals.end());
  std::vector<double> out;
  for (double s : vals)
    if (out.empty() || s - out.back() > 1e-10 * (1.0 + std::abs(s))) out.push_back(s);
  vals.swap(out);
}

std::vector<detail::MidPiece> trace_polytope(const SymmetricPolytope& poly, const Vec& p,
                                             const Vec& q, double window, bool verify) {
  const Vec d = q - p;
  const Vec hhat = normalized(rot90(d));
  const double gd = poly.gauge(d);
  const double sp = dot(p, hhat);  // equals dot(q, hhat)

  // Candidate junctions: scan positions where a growth vertex ray p + lam*v
  // (or q + lam*v) becomes equidistant through some facet of the far site.
  // Every slope change of either interval end happens at one of these, so the
  // candidate set partitions the scan axis into signature-constant intervals.
  std::vector<double> sb;
  for (const Vec& v : poly.vertices) {
    const double sv = dot(v, hhat);
    for (const Vec& a : poly.facets) {
      const double ad = dot(a, d);
      const double av = dot(a, v);
      if (std::abs(av - 1.0) < 1e-14) continue;
      for (int side = 0; side < 2; ++side) {
        const double lam = (side == 0) ? ad / (av - 1.0) : ad / (1.0 - av);
        if (!(lam > 0.25 * gd) || lam > 1e12) continue;  // true events have lam >= gauge(d)/2
        const Vec probe = (side == 0) ? lam * v - d : lam * v + d;
        if (std::abs(poly.gauge(probe) - lam) > 1e-6 * (1.0 + lam)) continue;
        const double s = sp + lam * sv;
        if (std::abs(s) <= window) sb.push_back(s);
      }
    }
  }
  sort_dedupe(sb);

  const double pad = 1.0 + (sb.empty() ? 0.0 : 0.3 * (std::abs(sb.front()) + std::abs(sb.back())));
  auto direct = [&](double s) { return s_interval_polytope(poly, p, q, s * hhat); };

  std::vector<detail::MidPiece> pieces;
  for (int round = 0;; ++round) {
    pieces.clear();
    const int K = static_cast<int>(sb.size());
    for (int k = 0; k <= K; ++k) {
      const double lo = (k == 0) ? -window : sb[k - 1];
      const double hi = (k == K) ? window : sb[k];
      if (!(lo < hi)) continue;
      double smid;
      if (std::isinf(lo) && std::isinf(hi))
        smid = 0.0;
      else if (std::isinf(lo))
        smid = hi - pad;
      else if (std::isinf(hi))
        smid = lo + pad;
      else
        smid = 0.5 * (lo + hi);
      const SInterval sig = direct(smid);
      if (!pieces.empty() && same_signature(pieces.back().sig, sig)) {
        pieces.back().s_hi = hi;
        continue;
      }
      const LineCoef line = line_from_signature(poly, p, q, hhat, sig);
      detail::MidPiece pc;
      pc.s_lo = lo;
      pc.s_hi = hi;
      pc.alpha = line.alpha;
      pc.beta = line.beta;
      pc.sig = sig;
      pieces.push_back(pc);
    }

    if (!verify || round == 3) break;
    std::vector<double> bad;
    for (const auto& pc : pieces) {
      double a = pc.s_lo, b = pc.s_hi;
      if (std::isinf(a) && std::isinf(b)) {
        a = -pad;
        b = pad;
      } else if (std::isinf(a)) {
        a = b - 2.0 * pad;
      } else if (std::isinf(b)) {
        b = a + 2.0 * pad;
      }
      for (double f : {0.23, 0.5, 0.77}) {
        const double s = a + f * (b - a);
        const double t_line = pc.alpha + pc.beta * s;
        if (std::abs(direct(s).mid() - t_line) > 1e-9 * (1.0 + std::abs(t_line)))
          bad.push_back(s);
      }
    }
    if (bad.empty()) break;
    sb.insert(sb.end(), bad.begin(), bad.end());
    sort_dedupe(sb);
  }
  return pieces;
}

}  // namespace

SInterval s_interval(const GaugeBody& body, const Vec& p, const Vec& q, const Vec& x,
                     double eps) {
  check_sites(p, q, "s_interval");
  check_in_hyperplane(x, q - p, eps, "s_interval");
  if (body.is_polytope()) return s_interval_polytope(body.poly(), p, q, x);
  if (body.is_ball()) return s_interval_ball(p, q, x);
  return s_interval_numeric(body, p, q, x);
}

Vec midpoint_map(const GaugeBody& body, const Vec& p, const Vec& q, const Vec& x, double eps) {
  return x + s_interval(body, p, q, x, eps).mid() * (q - p);
}

namespace detail {

std::vector<MidPiece> trace_midline_pieces(const GaugeBody& body, const Vec& p, const Vec& q,
                                           double window, bool verify, double eps) {
  check_sites(p, q, "trace_midline_pieces");
  (void)eps;
  if (body.dim() != 2)
    throw GeometryError("trace_midline_pieces: body must be 2-dimensional");
  if (body.is_ball()) {
    MidPiece pc;
    pc.s_lo = -window;
    pc.s_hi = window;
    pc.alpha = (norm2(q) - norm2(p)) / (2.0 * norm2(q - p));
    pc.beta = 0.0;
    return {pc};
  }
  if (!body.is_polytope())
    throw GeometryError("trace_midline_pieces: supported gauges are polygons and balls");
  return trace_polytope(body.poly(), p, q, window, verify);
}

}  // namespace detail

PLChain bisector_2d_exact(const GaugeBody& body, const Vec& p, const Vec& q, double eps) {
  if (body.dim() != 2) throw GeometryError("bisector_2d_exact: body must be 2-dimensional");
  check_sites(p, q, "bisector_2d_exact");
  const Vec d = q - p;
  const Vec hhat = normalized(rot90(d));
  PLChain ch;
  ch.p = p;
  ch.q = q;
  ch.scan_dir = hhat;
  if (body.is_ball()) {
    const Vec mid = 0.5 * (p + q);
    ch.head_ray = {mid, -1.0 * hhat};
    ch.tail_ray = {mid, hhat};
    return ch;
  }
  const auto pieces = detail::trace_midline_pieces(body, p, q, kInf, true, eps);
  // Junction points come from the direct solve at the junction scan value: the
  // adjacent midlines meet there, so the midpoint itself is the breakpoint.
  for (size_t r = 1; r < pieces.size(); ++r) {
    const double s = pieces[r].s_lo;
    const SInterval ival = s_interval(body, p, q, s * hhat, eps);
    ch.breakpoints.push_back(s * hhat + ival.mid() * d);
  }
  const Vec dir_head = normalized(hhat + pieces.front().beta * d);
  const Vec dir_tail = normalized(hhat + pieces.back().beta * d);
  if (ch.breakpoints.empty()) {
    const Vec anchor = pieces.front().alpha * d;
    ch.head_ray = {anchor, -1.0 * dir_head};
    ch.tail_ray = {anchor, dir_tail};
  } else {
    ch.head_ray = {ch.breakpoints.front(), -1.0 * dir_head};
    ch.tail_ray = {ch.breakpoints.back(), dir_tail};
  }
  return ch;
}

Vec PLChain::segment_dir(int k) const {
  const int n = segment_count();
  if (k < 0 || k >= n) throw std::out_of_range("PLChain::segment_dir: index out of range");
  if (k == 0) return breakpoints.empty() ? tail_ray.dir : -1.0 * head_ray.dir;
  if (k == n - 1) return tail_ray.dir;
  return normalized(breakpoints[k] - breakpoints[k - 1]);
}

int PLChain::merged_piece_count(double ang_eps) const {
  int pieces = 1;
  for (int k = 1; k < segment_count(); ++k) {
    const Vec u = segment_dir(k - 1);
    const Vec w = segment_dir(k);
    if (std::atan2(std::abs(cross2(u, w)), dot(u, w)) > ang_eps) ++pieces;
  }
  return pieces;
}

Vec PLChain::point_at(double s) const {
  auto sval = [&](const Vec& w) { return dot(w, scan_dir); };
  if (breakpoints.empty()) {
    const Vec& a = head_ray.anchor;
    return a + ((s - sval(a)) / dot(tail_ray.dir, scan_dir)) * tail_ray.dir;
  }
  const double s0 = sval(breakpoints.front());
  if (s <= s0)
    return breakpoints.front() + ((s - s0) / dot(head_ray.dir, scan_dir)) * head_ray.dir;
  const double sl = sval(breakpoints.back());
  if (s >= sl)
    return breakpoints.back() + ((s - sl) / dot(tail_ray.dir, scan_dir)) * tail_ray.dir;
  for (size_t k = 1; k < breakpoints.size(); ++k) {
    const double sk = sval(breakpoints[k]);
    if (s <= sk) {
      const double sk0 = sval(breakpoints[k - 1]);
      if (sk - sk0 <= 0.0) return breakpoints[k];
      const double f = (s - sk0) / (sk - sk0);
      return breakpoints[k - 1] + f * (breakpoints[k] - breakpoints[k - 1]);
    }
  }
  return breakpoints.back();
}

int piece_count(const PLChain& chain, double ang_eps) { return chain.merged_piece_count(ang_eps); }

FacetClassification classify_facets(const SymmetricPolytope& poly, const Vec& p, const Vec& q,
                                    double eps) {
  check_sites(p, q, "classify_facets");
  const Vec d = q - p;
  FacetClassification out;
  for (int i = 0; i < poly.facet_count(); ++i) {
    const double v = dot(poly.facets[i], d);
    const double tol = eps * norm(poly.facets[i]) * norm(d);
    if (v > tol)
      out.plus.push_back(i);
    else if (v < -tol)
      out.minus.push_back(i);
    else
      out.zero.push_back(i);
  }
  return out;
}

PieceBound piece_bound(int m, const FacetClassification& cls) {
  const long long total = static_cast<long long>(cls.minus.size()) +
                          static_cast<long long>(cls.zero.size()) +
                          static_cast<long long>(cls.plus.size());
  if (total != m)
    throw std::invalid_argument("piece_bound: classification does not cover m facets");
  PieceBound out;
  out.generic = static_cast<long long>(cls.minus.size()) * static_cast<long long>(cls.plus.size());
  out.worst = m * m / 4.0 + static_cast<double>(m) * m * m / 27.0;
  return out;
}

HeightProfile height_profile(const SymmetricPolytope& poly, const Vec& p, const Vec& q,
                             const Vec& v, double eps) {
  check_sites(p, q, "height_profile");
  const Vec d = q - p;
  check_same_dim(v, d, "height_profile");
  if (std::abs(dot(v, d)) > eps * (1.0 + norm(v)) * norm(d))
    throw GeometryError("height_profile: v must lie in the hyperplane H(p,q)");
  double mu_lo = -kInf, mu_hi = kInf;
  for (const Vec& a : poly.facets) {
    const double av = dot(a, v);
    const double ad = dot(a, d);
    const double tol = 1e-14 * norm(a) * norm(d);
    if (ad > tol)
      mu_hi = std::min(mu_hi, (1.0 - av) / ad);
    else if (ad < -tol)
      mu_lo = std::max(mu_lo, (1.0 - av) / ad);
    else if (av > 1.0 + eps)
      throw GeometryError("height_profile: v lies outside the projection of the body");
  }
  if (mu_lo == -kInf || mu_hi == kInf)
    throw GeometryError("height_profile: body is unbounded along q-p");
  if (mu_lo > mu_hi + eps)
    throw GeometryError("height_profile: v lies outside the projection of the body");
  if (mu_lo > mu_hi) mu_lo = mu_hi = 0.5 * (mu_lo + mu_hi);
  HeightProfile out;
  out.v_star = v + mu_hi * d;
  out.v_prime = v + mu_lo * d;
  out.h = mu_hi - mu_lo;
  return out;
}

Vec midpoint_closed_form(const SymmetricPolytope& poly, const Vec& p, const Vec& q, double alpha,
                         const Vec& v, double eps) {
  const HeightProfile hp = height_profile(poly, p, q, v, eps);
  if (hp.h <= eps) throw GeometryError("midpoint_closed_form: chord over v has zero height");
  if (alpha < 1.0 / hp.h - 1e-12)
    throw GeometryError("midpoint_closed_form: requires alpha * h(v) >= 1");
  return p + alpha * hp.v_star - (0.5 * (alpha * hp.h - 1.0)) * (q - p);
}

std::vector<Jump> continuity_probe(const GaugeBody& body, const Vec& p, const Vec& q,
                                   const std::function<Vec(double)>& path, int samples) {
  check_sites(p, q, "continuity_probe");
  if (samples < 2) return {};
  const Vec d = q - p;
  const double dd = norm2(d);
  std::vector<Vec> xs(samples), ws(samples);
  for (int k = 0; k < samples; ++k) {
    Vec x = path(static_cast<double>(k) / (samples - 1));
    x = x - (dot(x, d) / dd) * d;  // keep the walk exactly in H(p,q)
    xs[k] = x;
    ws[k] = midpoint_map(body, p, q, x);
  }
  std::vector<double> gap(samples, 0.0), step(samples, 0.0);
  std::vector<char> flagged(samples, 0);
  for (int k = 1; k < samples; ++k) {
    gap[k] = norm(ws[k] - ws[k - 1]);
    step[k] = norm(xs[k] - xs[k - 1]);
    double lip = 1.0;  // floor; these maps move O(1) per unit step away from a jump
    for (int j = std::max(1, k - 10); j < k; ++j)
      if (step[j] > 0.0) lip = std::max(lip, gap[j] / step[j]);
    if (step[k] > 0.0 && gap[k] > 10.0 * step[k] * lip) flagged[k] = 1;
  }
  std::vector<Jump> out;
  int k = 1;
  while (k < samples) {
    if (!flagged[k]) {
      ++k;
      continue;
    }
    const int r0 = k;
    while (k < samples && flagged[k]) ++k;
    const int r1 = k - 1;
    double mag = 0.0;
    for (int j = r0; j <= r1; ++j) mag = std::max(mag, gap[j]);
    out.push_back({xs[(r0 + r1) / 2], mag});
  }
  return out;
}

std::vector<double> convergence_deviation(const std::vector<GaugeBody>& family,
                                          const GaugeBody& limit_body, const Vec& p, const Vec& q,
                                          double window) {
  const PLChain lim = bisector_2d_exact(limit_body, p, q);
  const Vec dhat = normalized(q - p);
  std::vector<double> out;
  out.reserve(family.size());
  for (const GaugeBody& member : family) {
    const PLChain ch = bisector_2d_exact(member, p, q);
    // The vertical gap between two piecewise-linear graphs peaks at a node.
    std::vector<double> nodes = {-window, window};
    for (const PLChain* c : {&lim, &ch})
      for (const Vec& w : c->breakpoints) {
        const double s = dot(w, c->scan_dir);
        if (s > -window && s < window) nodes.push_back(s);
      }
    double dev = 0.0;
    for (double s : nodes)
      dev = std::max(dev, std::abs(dot(ch.point_at(s) - lim.point_at(s), dhat)));
    out.push_back(dev);
  }
  return out;
}

}  // namespace minkcell
