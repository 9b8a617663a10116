#pragma once

#include <cstdint>
#include <random>

namespace cet {

/// splitmix64 step; used to derive well-separated sub-seeds from a base seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ (0x9e3779b97f4a7c15ULL + b));
}

/// Seeded uniform stream on (0, 1). mt19937_64 output is fixed by the
/// standard, so streams are bit-identical across platforms.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed)
      : seed_(seed), engine_(splitmix64(seed)) {}

  /// Derive an independent sub-stream keyed by (seed, tag).
  SeedStream substream(std::uint64_t tag) const {
    return SeedStream(mix_seed(seed_, tag));
  }

  /// Uniform on the open interval (0, 1); 53-bit resolution.
  double next_uniform() {
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound) by rejection; unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace cet
