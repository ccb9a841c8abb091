#include "fpde/verifier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fpde/rng.hpp"

namespace fpde {

namespace {

Cx disk_point(SplitMix64& rng, double radius) {
  double rho = radius * std::sqrt(rng.uniform01());
  double ang = 2.0 * std::numbers::pi * rng.uniform01();
  return std::polar(rho, ang);
}

}  // namespace

ExpPoly residual(const ExpPoly& f, const PdeProblem& problem) {
  ExpPoly df = f.partial_z1();
  ExpPoly lhs = problem.a1 * df.pow(problem.n) + problem.a2 * f.pow(problem.n);
  return lhs - problem.rhs_exp_poly();
}

ResidualReport verify(const ExpPoly& f, const PdeProblem& problem,
                      int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  ResidualReport rep;
  rep.residual = residual(f, problem);
  rep.symbolic_zero = rep.residual.is_zero();
  rep.sample_count = samples;
  rep.seed = seed;

  ExpPoly dn = f.partial_z1().pow(problem.n);
  ExpPoly fn = f.pow(problem.n);
  ExpPoly rhs = problem.rhs_exp_poly();

  SplitMix64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    Cx z1 = disk_point(rng, 2.0);
    Cx z2 = disk_point(rng, 2.0);
    auto v1 = dn.eval(z1, z2);
    auto v2 = fn.eval(z1, z2);
    auto vr = rhs.eval(z1, z2);
    if (!v1 || !v2 || !vr) {
      ++rep.skipped_points;
      continue;
    }
    Cx t1 = problem.a1 * *v1;
    Cx t2 = problem.a2 * *v2;
    if (!is_finite(t1) || !is_finite(t2)) {
      ++rep.skipped_points;
      continue;
    }
    double num = std::abs(t1 + t2 - *vr);
    double den = 1.0 + std::abs(t1) + std::abs(t2) + std::abs(*vr);
    double rel = num / den;
    if (rel > rep.max_relative_numeric_residual)
      rep.max_relative_numeric_residual = rel;
  }
  rep.unreliable = rep.skipped_points * 10 > samples;
  return rep;
}

}  // namespace fpde
