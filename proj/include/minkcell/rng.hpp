#pragma once

#include <cstdint>

namespace minkcell {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based uniform in [0,1): value depends only on (seed, idx), never on
// evaluation order, so parallel loops stay deterministic under any partition.
inline double hash_uniform(uint64_t seed, uint64_t idx) {
  uint64_t h = splitmix64(splitmix64(seed) ^ (0x632be59bd9b4e019ULL * (idx + 1)));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Small sequential generator for test/sample generation.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(splitmix64(seed ^ 0x5851f42d4c957f2dULL)) {}

  uint64_t next_u64() {
    state = splitmix64(state);
    return state;
  }
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }
};

}  // namespace minkcell
