#pragma once

#include <cstdint>
#include <vector>

#include "minkcell/body.hpp"

namespace minkcell {

// Execution mode for the bulk kernels. Parallel uses OpenMP when compiled in
// and must produce bit-identical results to Serial: per-sample counter RNG,
// integer/max reductions only.
enum class Exec { Serial, Parallel };

Exec default_exec();
bool parallel_available();

// Membership of each probe in the intersection of D(body, o, v) over vs.
std::vector<uint8_t> probe_membership(const GaugeBody& body, const std::vector<Vec>& vs,
                                      const std::vector<Vec>& probes, double eps, Exec exec);

// Monte Carlo hit count: samples the axis box [-half, half]^dim with the
// counter RNG and counts cell members. Bit-identical across partitions.
long long mc_hit_count(const GaugeBody& body, const std::vector<Vec>& vs, double half,
                       int dim, long long samples, uint64_t seed, double eps, Exec exec);

// One grid-certification sweep at resolution n per axis over the fundamental
// parallelepiped: a cell is certified covered when some translate has
// gauge(center - v) <= gamma - kappa*rho(cell); a cell whose center has
// min gauge > gamma is an uncovered witness.
struct CoverScan {
  long long certified = 0;
  long long undecided = 0;
  bool witness = false;
};
CoverScan grid_cover_scan(const GaugeBody& body, const Lattice& lat,
                          const std::vector<Vec>& translates, double gamma, int n,
                          Exec exec);

}  // namespace minkcell
