#pragma once

#include <cstdint>

namespace insep {

// splitmix64 (Steele/Lea/Flood). Chosen over std::mt19937_64 + distributions
// because byte-identical output across platforms and standard libraries is a
// hard requirement for deterministic reports.
//
// Seed splitting: independent stream k of master seed s is splitmix64 started
// from state s + k * 0x9E3779B97F4A7C15.  All sampling in the library derives
// sub-seeds this way and documents the stream index it uses.
class splitmix64 {
 public:
  explicit splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) by rejection-free modulo; bias is irrelevant
  // at desk scale (bound <= 2^32, 64 random bits).
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return seed + stream * 0x9E3779B97F4A7C15ull;
}

}  // namespace insep
