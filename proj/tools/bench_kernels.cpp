#include <chrono>
#include <cstdio>
#include <iostream>

#include "minkcell/catalog.hpp"
#include "minkcell/cell.hpp"
#include "minkcell/kernels.hpp"

namespace mk = minkcell;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void check(bool ok, const char* what) {
  if (!ok) {
    ++failures;
    std::cerr << "MISMATCH: " << what << "\n";
  }
}

}  // namespace

int main() {
  std::cerr << "parallel backend: " << (mk::parallel_available() ? "OpenMP" : "none") << "\n";

  const mk::GaugeBody body{mk::catalog::regular_polygon(16)};
  const mk::Lattice lat = mk::catalog::hexagon_tiling_lattice();
  const double gamma = mk::covering_radius(body, lat);
  const auto rel = mk::relevant_vectors(body, lat);

  {
    std::vector<mk::Vec> probes;
    for (int i = 0; i < 200000; ++i) {
      const double a = mk::hash_uniform(7, 2 * i), b = mk::hash_uniform(7, 2 * i + 1);
      probes.push_back(mk::Vec(4.0 * a - 2.0, 4.0 * b - 2.0));
    }
    auto t0 = std::chrono::steady_clock::now();
    const auto serial = mk::probe_membership(body, rel, probes, 1e-9, mk::Exec::Serial);
    const double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto parallel = mk::probe_membership(body, rel, probes, 1e-9, mk::Exec::Parallel);
    const double tp = seconds_since(t0);
    check(serial == parallel, "probe_membership serial vs parallel");
    std::fprintf(stderr, "probe_membership  serial %.3fs  parallel %.3fs  speedup %.2fx\n", ts,
                 tp, ts / tp);
  }

  {
    auto t0 = std::chrono::steady_clock::now();
    const long long hs = mk::mc_hit_count(body, rel, 2.0, 2, 2000000, 11, 1e-9, mk::Exec::Serial);
    const double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const long long hp =
        mk::mc_hit_count(body, rel, 2.0, 2, 2000000, 11, 1e-9, mk::Exec::Parallel);
    const double tp = seconds_since(t0);
    check(hs == hp, "mc_hit_count serial vs parallel");
    std::fprintf(stderr, "mc_hit_count      serial %.3fs  parallel %.3fs  speedup %.2fx\n", ts,
                 tp, ts / tp);
  }

  {
    const mk::GaugeBody cube{mk::catalog::cube()};
    const mk::Lattice z3 = mk::catalog::cubic_lattice(3, 2.0);
    const auto trans = mk::lattice_points_in_ball(z3, cube, 4.0);
    auto t0 = std::chrono::steady_clock::now();
    const auto ss = mk::grid_cover_scan(cube, z3, trans, 1.0, 96, mk::Exec::Serial);
    const double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto sp = mk::grid_cover_scan(cube, z3, trans, 1.0, 96, mk::Exec::Parallel);
    const double tp = seconds_since(t0);
    check(ss.certified == sp.certified && ss.undecided == sp.undecided &&
              ss.witness == sp.witness,
          "grid_cover_scan serial vs parallel");
    std::fprintf(stderr, "grid_cover_scan   serial %.3fs  parallel %.3fs  speedup %.2fx\n", ts,
                 tp, ts / tp);
  }

  std::cerr << (failures == 0 ? "all kernels agree\n" : "kernel mismatches found\n");
  return failures == 0 ? 0 : 1;
}
