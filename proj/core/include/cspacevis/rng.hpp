#pragma once

#include <cstdint>
#include <random>

namespace cspacevis {

// Seeded 64-bit generator with platform-independent derived draws.
// std::uniform_*_distribution is implementation-defined, so the mappings
// from raw 64-bit words to reals and bounded integers are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi], clamped so rounding never escapes the interval.
  double uniform(double lo, double hi) {
    double v = lo + (hi - lo) * uniform01();
    return v < lo ? lo : (v > hi ? hi : v);
  }

  // Uniform integer in [0, n). Rejection removes modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer; used to derive independent child seeds from a
// master seed and a stream tag.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace cspacevis
