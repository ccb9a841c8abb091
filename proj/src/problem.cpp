#include "fpde/problem.hpp"

#include <stdexcept>

namespace fpde {

namespace {

void check_constants(int n, Cx a1, Cx a2, Cx p1, Cx p2) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  auto nonzero_finite = [](Cx v, const char* name) {
    if (!is_finite(v))
      throw std::invalid_argument(std::string(name) + " must be finite");
    if (v == Cx(0.0, 0.0))
      throw std::invalid_argument(std::string(name) + " must be nonzero");
  };
  nonzero_finite(a1, "a1");
  nonzero_finite(a2, "a2");
  nonzero_finite(p1, "p1");
  nonzero_finite(p2, "p2");
}

}  // namespace

PdeProblem PdeProblem::linear(int n, Cx a1, Cx a2, Cx p1, Cx p2, LinearRhs rhs) {
  check_constants(n, a1, a2, p1, p2);
  if (!is_finite(rhs.lambda1) || !is_finite(rhs.lambda2) ||
      !is_finite(rhs.gamma1) || !is_finite(rhs.gamma2))
    throw std::invalid_argument("exponent parameters must be finite");
  if (rhs.lambda1 == rhs.lambda2)
    throw std::invalid_argument("lambda1 and lambda2 must differ");
  return PdeProblem{n, a1, a2, p1, p2, rhs};
}

PdeProblem PdeProblem::general(int n, Cx a1, Cx a2, Cx p1, Cx p2, GeneralRhs rhs) {
  check_constants(n, a1, a2, p1, p2);
  return PdeProblem{n, a1, a2, p1, p2, std::move(rhs)};
}

ExpPoly PdeProblem::rhs_exp_poly() const {
  Poly2 r, s;
  if (const auto* lin = linear_rhs()) {
    r = Poly2::monomial(1, 0, lin->lambda1) + Poly2::monomial(0, 1, lin->gamma1);
    s = Poly2::monomial(1, 0, lin->lambda2) + Poly2::monomial(0, 1, lin->gamma2);
  } else {
    r = general_rhs()->r;
    s = general_rhs()->s;
  }
  return ExpPoly::term(Poly2::constant(p1), std::move(r)) +
         ExpPoly::term(Poly2::constant(p2), std::move(s));
}

PdeProblem PdeProblem::with_a1(Cx v) const {
  PdeProblem p = *this;
  p.a1 = v;
  return p;
}

const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::NegThreeLambda:
      return "NegThreeLambda";
    case CaseTag::OmegaPlus:
      return "OmegaPlus";
    case CaseTag::OmegaMinus:
      return "OmegaMinus";
    case CaseTag::SumZero:
      return "SumZero";
    case CaseTag::ConstantDifference:
      return "ConstantDifference";
    case CaseTag::NoCase:
      return "NoCase";
  }
  return "unknown";
}

}  // namespace fpde
