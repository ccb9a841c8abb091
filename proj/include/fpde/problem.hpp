#pragma once

#include <variant>
#include <vector>

#include "fpde/exp_poly.hpp"

namespace fpde {

// Right-hand side p1*e^{lambda1 z1 + gamma1 z2} + p2*e^{lambda2 z1 + gamma2 z2}.
struct LinearRhs {
  Cx lambda1, gamma1, lambda2, gamma2;
};

// Right-hand side p1*e^{r} + p2*e^{s} with polynomial exponents.
struct GeneralRhs {
  Poly2 r, s;
};

// The equation a1*(df/dz1)^n + a2*f^n = p1*e^{r} + p2*e^{s}.
// Constants a1, a2, p1, p2 are nonzero and finite; n >= 1; a linear
// right-hand side additionally requires lambda1 != lambda2.
struct PdeProblem {
  int n = 3;
  Cx a1, a2, p1, p2;
  std::variant<LinearRhs, GeneralRhs> rhs;

  static PdeProblem linear(int n, Cx a1, Cx a2, Cx p1, Cx p2, LinearRhs rhs);
  static PdeProblem general(int n, Cx a1, Cx a2, Cx p1, Cx p2, GeneralRhs rhs);

  const LinearRhs* linear_rhs() const { return std::get_if<LinearRhs>(&rhs); }
  const GeneralRhs* general_rhs() const { return std::get_if<GeneralRhs>(&rhs); }

  ExpPoly rhs_exp_poly() const;  // p1 e^{r} + p2 e^{s}
  PdeProblem with_a1(Cx v) const;
};

enum class CaseTag {
  NegThreeLambda,      // lambda2 = -3 lambda1
  OmegaPlus,           // lambda2 = (1 + sqrt(3) i)/2 * lambda1
  OmegaMinus,          // lambda2 = (1 - sqrt(3) i)/2 * lambda1
  SumZero,             // lambda1 + lambda2 = 0
  ConstantDifference,  // n >= 5: r - s reduces to a constant
  NoCase,
};

const char* to_string(CaseTag t);

struct SolutionBranch {
  ExpPoly f;
  CaseTag case_tag = CaseTag::NoCase;
  std::vector<int> branch_indices;
  Cx required_a1;
  bool verified = false;
  // True when the branch was built in the swapped orientation
  // (p1,gamma1,lambda1) <-> (p2,gamma2,lambda2).
  bool swapped = false;
};

}  // namespace fpde
