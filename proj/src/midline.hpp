#pragma once

#include <vector>

#include "minkcell/bisector.hpp"
#include "minkcell/body.hpp"

namespace minkcell {
namespace detail {

// One linear piece of the midpoint graph in scan coordinates: over the probe
// points x(s) = s * scan_dir the midpoint sits at t(s) = alpha + beta * s in
// units of q-p, for s in [s_lo, s_hi] (ends may be infinite).
struct MidPiece {
  double s_lo = 0.0, s_hi = 0.0;
  double alpha = 0.0, beta = 0.0;
  SInterval sig;
};

// Exact piecewise-linear midpoint graph of a polygon or ball gauge restricted
// to |s| <= window (pass an infinite window for the full chain). Pieces are
// maximal runs of one active facet signature; junctions sit at vertex-passage
// events of the growth construction. With verify set, every piece is
// cross-checked against the direct interval solve and the partition is
// refined if a deviation shows up.
std::vector<MidPiece> trace_midline_pieces(const GaugeBody& body, const Vec& p, const Vec& q,
                                           double window, bool verify, double eps = 1e-9);

// World point of a midline piece at scan parameter s.
inline Vec midline_point(const Vec& scan_dir, const Vec& d, double s, double alpha,
                         double beta) {
  return s * scan_dir + (alpha + beta * s) * d;
}

}  // namespace detail
}  // namespace minkcell
