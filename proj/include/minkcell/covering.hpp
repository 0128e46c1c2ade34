#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minkcell/body.hpp"

namespace minkcell {

// Lattice basis ((a,0),(b,c)) with det = a*c; canonical form 0 <= b <= a/2
// (b reduced mod a, mirror-folded when the body allows it).
struct LatticeParam2D {
  double a = 1.0, b = 0.0, c = 1.0;
  Lattice to_lattice() const;
};

// vol(P)/det(Lambda); requires the cell to fit in P (covering radius <= 1).
// Throws GeometryError on an infeasible lattice.
double density(const GaugeBody& poly, const Lattice& lat);

// True iff covering_radius(poly, lat) <= 1 + 1e-6.
bool feasibility(const GaugeBody& poly, const Lattice& lat);

struct OptimizeConfig {
  int starts = 32;
  uint64_t seed = 0;
  double tol = 1e-10;     // simplex size stop
  int max_iters = 400;    // per start
};

struct OptimizationReport {
  LatticeParam2D best;
  double density = 0.0;
  double gamma = 0.0;
  bool feasible = false;
  std::vector<std::pair<int, double>> trace;  // (start index, best density so far)
};

// Multi-start Nelder-Mead on (a,b,c) maximizing det under the penalty
// 10*vol(P)*max(0, gamma-1), then a coordinate grid polish at step 1e-4.
// Deterministic for a fixed seed; starts may run concurrently and merge by
// best density with lexicographic (a,b,c) tie-break.
OptimizationReport optimize(const GaugeBody& poly, const OptimizeConfig& cfg);

struct BenchmarkRow {
  std::string body;
  double density = 0.0;
  double reference = 0.0;
  double gap = 0.0;       // (density - reference) / reference
  double gamma = 0.0;
  LatticeParam2D best;
  double runtime_sec = 0.0;  // reported on stderr only, never in artifacts
};

// Optimize over {square, hexagon, octagon, 16-gon, 64-gon}. References:
// exact 1.0 for the tiling bodies, pre-build grid-search estimates for the
// octagon and 16-gon, the disc limit 2*pi/sqrt(27) for the 64-gon.
std::vector<BenchmarkRow> benchmark_suite(uint64_t seed, int starts = 32);

}  // namespace minkcell
