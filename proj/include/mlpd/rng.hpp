#pragma once

#include <cstdint>

#include "mlpd/complex_log.hpp"

namespace mlpd {

// splitmix64: tiny, deterministic across platforms; used for every
// randomized grid so reports reproduce byte-for-byte from a seed.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform on the disc |z| <= r
  cplx disc(double r) {
    while (true) {
      const double x = range(-1.0, 1.0);
      const double y = range(-1.0, 1.0);
      if (x * x + y * y <= 1.0) return {r * x, r * y};
    }
  }
};

}  // namespace mlpd
