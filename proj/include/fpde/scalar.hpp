#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace fpde {

using Cx = std::complex<double>;

// Tolerances shared across the canonical algebra and the solver.
//   kEpsZero  prunes coefficients relative to the largest magnitude in a
//             polynomial (and merged-run scale at the exp-poly level);
//   kEpsFreq  decides when two exponent polynomials denote the same
//             frequency;
//   kEpsCase  drives the lambda-relation classification and the solver's
//             coefficient-consistency checks.
inline constexpr double kEpsZero = 1e-12;
inline constexpr double kEpsFreq = 1e-9;
inline constexpr double kEpsCase = 1e-9;

// Degree reported for the zero polynomial (stands in for -infinity).
inline constexpr int kZeroPolyDegree = -1;

inline bool is_finite(Cx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Principal k-th root: k-th root of the magnitude, argument divided by k.
Cx principal_root(Cx w, int k);

// All k complex k-th roots of w, principal root first, then
// counterclockwise by k-th roots of unity. The position in the returned
// vector is the branch index reported in SolutionBranch::branch_indices.
std::vector<Cx> nth_roots(Cx w, int k);

// w^n for integer n >= 0 by repeated squaring (no pow() branch cuts).
Cx ipow(Cx w, int n);

}  // namespace fpde
