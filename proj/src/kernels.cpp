#include "minkcell/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "minkcell/cell.hpp"
#include "minkcell/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace minkcell {

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

Exec default_exec() { return parallel_available() ? Exec::Parallel : Exec::Serial; }

namespace {

bool member(const GaugeBody& body, const std::vector<Vec>& vs, const Vec& y, double eps) {
  const Vec o = Vec::zero(y.dim);
  for (const Vec& v : vs)
    if (!in_D(body, o, v, y, eps)) return false;
  return true;
}

Vec box_sample(uint64_t seed, long long idx, int dim, double half) {
  Vec y = Vec::zero(dim);
  for (int k = 0; k < dim; ++k)
    y.c[k] = (2.0 * hash_uniform(seed, static_cast<uint64_t>(idx) * dim + k) - 1.0) * half;
  return y;
}

}  // namespace

std::vector<uint8_t> probe_membership(const GaugeBody& body, const std::vector<Vec>& vs,
                                      const std::vector<Vec>& probes, double eps, Exec exec) {
  const long long n = static_cast<long long>(probes.size());
  std::vector<uint8_t> out(probes.size(), 0);
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) out[i] = member(body, vs, probes[i], eps) ? 1 : 0;
    return out;
  }
#endif
  (void)exec;
  for (long long i = 0; i < n; ++i) out[i] = member(body, vs, probes[i], eps) ? 1 : 0;
  return out;
}

long long mc_hit_count(const GaugeBody& body, const std::vector<Vec>& vs, double half, int dim,
                       long long samples, uint64_t seed, double eps, Exec exec) {
  long long hits = 0;
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static) reduction(+ : hits)
    for (long long i = 0; i < samples; ++i)
      if (member(body, vs, box_sample(seed, i, dim, half), eps)) ++hits;
    return hits;
  }
#endif
  (void)exec;
  for (long long i = 0; i < samples; ++i)
    if (member(body, vs, box_sample(seed, i, dim, half), eps)) ++hits;
  return hits;
}

namespace {

// Per-cell verdict shared by both execution paths. No early exit anywhere, so
// serial and parallel sweeps count the exact same cells.
struct CellVerdict {
  int certified = 0;
  int undecided = 0;
  int witness = 0;
};

CellVerdict scan_cell(const GaugeBody& body, const Lattice& lat,
                      const std::vector<Vec>& translates, double gamma, int n, double margin,
                      long long idx) {
  const int dim = lat.dim;
  Vec u = Vec::zero(dim);
  long long rest = idx;
  for (int k = 0; k < dim; ++k) {
    u.c[k] = (static_cast<double>(rest % n) + 0.5) / n;
    rest /= n;
  }
  const Vec x = lat.basis.apply(u);
  double best = body.gauge(x);  // the origin translate
  for (const Vec& v : translates) best = std::min(best, body.gauge(x - v));
  CellVerdict verdict;
  if (best <= gamma - margin)
    verdict.certified = 1;
  else if (best > gamma)
    verdict.witness = 1;
  else
    verdict.undecided = 1;
  return verdict;
}

}  // namespace

CoverScan grid_cover_scan(const GaugeBody& body, const Lattice& lat,
                          const std::vector<Vec>& translates, double gamma, int n, Exec exec) {
  const int dim = lat.dim;
  long long total = 1;
  for (int k = 0; k < dim; ++k) total *= n;
  // World half-diagonal of one grid cell: max over the corner sign patterns.
  double rho = 0.0;
  for (int mask = 0; mask < (1 << (dim - 1)); ++mask) {
    Vec e = lat.basis.col(0);
    for (int k = 1; k < dim; ++k) {
      const Vec bk = lat.basis.col(k);
      e = (mask >> (k - 1)) & 1 ? e - bk : e + bk;
    }
    rho = std::max(rho, 0.5 * norm(e) / n);
  }
  const double margin = body.kappa() * rho;

  long long certified = 0, undecided = 0;
  int witness = 0;
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static) reduction(+ : certified, undecided) reduction(| : witness)
    for (long long idx = 0; idx < total; ++idx) {
      const CellVerdict v = scan_cell(body, lat, translates, gamma, n, margin, idx);
      certified += v.certified;
      undecided += v.undecided;
      witness |= v.witness;
    }
    return {certified, undecided, witness != 0};
  }
#endif
  (void)exec;
  for (long long idx = 0; idx < total; ++idx) {
    const CellVerdict v = scan_cell(body, lat, translates, gamma, n, margin, idx);
    certified += v.certified;
    undecided += v.undecided;
    witness |= v.witness;
  }
  return {certified, undecided, witness != 0};
}

}  // namespace minkcell
