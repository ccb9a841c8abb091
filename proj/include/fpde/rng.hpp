#pragma once

#include <cstdint>

namespace fpde {

// splitmix64 generator. Standard-library distributions are
// implementation-defined, so every seeded stream that feeds an output
// contract (verifier sampling, sphere sampling) goes through this.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log() argument.
  double uniform01_open() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal pair via Box-Muller.
  void gaussian_pair(double& g0, double& g1);

 private:
  std::uint64_t state_;
};

// Deterministic derived seed for sub-streams (one per grid point etc.).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace fpde
