#include "fpde/rng.hpp"

#include <cmath>
#include <numbers>

namespace fpde {

void SplitMix64::gaussian_pair(double& g0, double& g1) {
  double u1 = uniform01_open();
  double u2 = uniform01();
  double rad = std::sqrt(-2.0 * std::log(u1));
  double ang = 2.0 * std::numbers::pi * u2;
  g0 = rad * std::cos(ang);
  g1 = rad * std::sin(ang);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 g(seed ^ (salt * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull));
  return g.next();
}

}  // namespace fpde
