#pragma once

#include <cstdint>

namespace pcert {

// Deterministic pseudo-random generator (splitmix64). The standard <random>
// engines are seed-stable but the distributions are not specified
// bit-exactly across implementations; reports must be byte-identical across
// platforms, so the few helpers needed are defined here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

}  // namespace pcert
