#pragma once

#include <cstdint>

#include "fpde/problem.hpp"

namespace fpde {

struct ResidualReport {
  bool symbolic_zero = false;
  ExpPoly residual;
  // max over sampled points of |a1 (df)^n + a2 f^n - RHS| divided by
  // 1 + |a1 (df)^n| + |a2 f^n| + |RHS| at that point.
  double max_relative_numeric_residual = 0.0;
  int sample_count = 0;
  std::uint64_t seed = 0;
  int skipped_points = 0;  // evaluation overflow
  bool unreliable = false;  // more than 10% of points skipped
};

// a1*(df/dz1)^n + a2*f^n - (p1 e^{r} + p2 e^{s}) in canonical form.
ExpPoly residual(const ExpPoly& f, const PdeProblem& problem);

// Symbolic residual plus a seeded numeric cross-check on pseudo-random
// points of the bidisk |z1| <= 2, |z2| <= 2. Deterministic for fixed
// (f, problem, samples, seed).
ResidualReport verify(const ExpPoly& f, const PdeProblem& problem,
                      int samples, std::uint64_t seed);

}  // namespace fpde
