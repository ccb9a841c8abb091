#pragma once

#include <cstdint>
#include <vector>

#include "fpde/exp_poly.hpp"

namespace fpde {

// Point on the sphere |z1|^2 + |z2|^2 = radius^2 in C^2.
struct SpherePoint {
  Cx z1, z2;
  double radius = 0.0;
};

struct GrowthPoint {
  double r = 0.0;
  double m_estimate = 0.0;
  double std_error = 0.0;
};

struct GrowthCurve {
  std::vector<GrowthPoint> points;
  double order_estimate = 0.0;
  // 95% normal-approximation half-width of the log-log slope; +infinity
  // when the fit is degenerate (fewer than 3 usable points).
  double order_ci_halfwidth = 0.0;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

// count i.i.d. samples from the unitarily invariant probability measure on
// the radius-r sphere (4 Gaussians, normalized). Deterministic in seed.
std::vector<SpherePoint> sample_sphere(double r, int count, std::uint64_t seed);

// Monte Carlo proximity function m(r, f): mean of log+|f| over the sphere,
// evaluated in log space (exponentials beyond the double range are fine).
// Bit-identical for identical (f, r, count, seed). Throws on f == 0.
Estimate proximity(const ExpPoly& f, double r, int count, std::uint64_t seed);

// Characteristic T(r, f); equals m(r, f) for entire f (no poles).
Estimate characteristic(const ExpPoly& f, double r, int count,
                        std::uint64_t seed);

// Least-squares slope of log T against log r over the upper half of the
// grid. Grid must be strictly increasing, >= 6 points, max/min >= 10.
// Non-positive estimates drop out; with fewer than 2 usable points the
// order reports 0 with an infinite half-width.
GrowthCurve order_fit(const ExpPoly& f, const std::vector<double>& r_grid,
                      int count, std::uint64_t seed);

// Deterministic pairwise (cascade) summation; reduction order is fixed
// regardless of how the inputs were produced.
double pairwise_sum(const double* v, std::size_t n);

}  // namespace fpde
