#include "fpde/solver.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "fpde/verifier.hpp"

namespace fpde {

namespace {

const double kSqrt3 = std::sqrt(3.0);

Cx omega_plus() { return {0.5, 0.5 * kSqrt3}; }
Cx omega_minus() { return {0.5, -0.5 * kSqrt3}; }

// c * e^{l1 z1 + l2 z2} as a canonical one-term value.
ExpPoly wave(Cx c, Cx l1, Cx l2) {
  return ExpPoly::term(Poly2::constant(c),
                       Poly2::monomial(1, 0, l1) + Poly2::monomial(0, 1, l2));
}

LinearRhs swapped_rhs(const LinearRhs& r) {
  return {r.lambda2, r.gamma2, r.lambda1, r.gamma1};
}

PdeProblem swapped_problem(const PdeProblem& p, const LinearRhs& lin) {
  return PdeProblem{p.n, p.a1, p.a2, p.p2, p.p1, swapped_rhs(lin)};
}

bool verify_branch(const ExpPoly& f, const PdeProblem& p, Cx required_a1) {
  return residual(f, p.with_a1(required_a1)).is_zero();
}

SolutionBranch make_branch(ExpPoly f, CaseTag tag, std::vector<int> indices,
                           Cx required_a1, const PdeProblem& p, bool swapped) {
  SolutionBranch b;
  b.verified = verify_branch(f, p, required_a1);
  b.f = std::move(f);
  b.case_tag = tag;
  b.branch_indices = std::move(indices);
  b.required_a1 = required_a1;
  b.swapped = swapped;
  return b;
}

}  // namespace

CaseTag classify_oriented(Cx lambda1, Cx lambda2, double eps) {
  if (lambda1 == Cx(0.0, 0.0))
    throw std::domain_error("degenerate parameter: lambda1 = 0");
  double scale = eps * std::abs(lambda1);
  if (std::abs(lambda2 + 3.0 * lambda1) <= scale) return CaseTag::NegThreeLambda;
  if (std::abs(lambda2 - omega_plus() * lambda1) <= scale)
    return CaseTag::OmegaPlus;
  if (std::abs(lambda2 - omega_minus() * lambda1) <= scale)
    return CaseTag::OmegaMinus;
  if (std::abs(lambda1 + lambda2) <= scale) return CaseTag::SumZero;
  return CaseTag::NoCase;
}

Classification classify(const LinearRhs& rhs, double eps) {
  CaseTag direct = classify_oriented(rhs.lambda1, rhs.lambda2, eps);
  if (direct != CaseTag::NoCase) return {direct, false};
  if (rhs.lambda2 != Cx(0.0, 0.0)) {
    CaseTag sw = classify_oriented(rhs.lambda2, rhs.lambda1, eps);
    if (sw != CaseTag::NoCase) return {sw, true};
  }
  return {CaseTag::NoCase, false};
}

// n = 3, lambda2 = -3 lambda1:
//   f = c1 e^{lambda1 z1} + c2 e^{-lambda1 z1},
//   c2 = v e^{(gamma2/3) z2},       v^3   = p2/(2 a2)
//   c1 = u e^{((gamma1-gamma2/3)/2) z2},  u^2 = p1/(6 a2 v)
//   a1 = -a2 / lambda1^3
// Branch indices: [cube-root index of v, square-root index of u].
std::vector<SolutionBranch> construct_n3_neg_three(const PdeProblem& p,
                                                   bool swapped) {
  const LinearRhs& lin = *p.linear_rhs();
  Cx l1 = lin.lambda1;
  Cx p1h = p.p1 / p.a2, p2h = p.p2 / p.a2;
  Cx required = -p.a2 / ipow(l1, 3);
  Cx alpha = (lin.gamma1 - lin.gamma2 / 3.0) / 2.0;
  Cx beta = lin.gamma2 / 3.0;
  std::vector<SolutionBranch> out;
  auto vs = nth_roots(p2h / 2.0, 3);
  for (int k = 0; k < 3; ++k) {
    Cx v = vs[k];
    auto us = nth_roots(p1h / (6.0 * v), 2);
    for (int s = 0; s < 2; ++s) {
      ExpPoly f = wave(us[s], l1, alpha) + wave(v, -l1, beta);
      out.push_back(make_branch(std::move(f), CaseTag::NegThreeLambda, {k, s},
                                required, p, swapped));
    }
  }
  return out;
}

// n = 3, lambda2 = omega(+-) lambda1:
//   f = u e^{mu1 z1 + alpha z2} + v e^{mu2 z1 + beta z2} with
//     plus:  mu1 = i sqrt3 lambda1 / 3, mu2 = (3 - i sqrt3) lambda1 / 6
//     minus: mu1 = -i sqrt3 lambda1 / 3, mu2 = (3 + i sqrt3) lambda1 / 6
//   The two cross terms of the cubic match the RHS when
//     plus:  u v^2 = p1 (3 + sqrt3 i)/(18 a2), u^2 v = p2 (3 - sqrt3 i)/(18 a2)
//     minus: u v^2 = p1 (3 - sqrt3 i)/(18 a2), u^2 v = p2 (3 + sqrt3 i)/(18 a2)
//   and a1 = -+ 3 sqrt3 a2 i / lambda1^3 (minus sign for the plus case).
//   alpha = (2 gamma2 - gamma1)/3, beta = (2 gamma1 - gamma2)/3.
// Branch index: [cube-root index of w = u v].
std::vector<SolutionBranch> construct_n3_omega(const PdeProblem& p, bool plus,
                                               bool swapped) {
  const LinearRhs& lin = *p.linear_rhs();
  Cx l1 = lin.lambda1;
  Cx i(0.0, 1.0);
  Cx mu1 = (plus ? i : -i) * kSqrt3 * l1 / 3.0;
  Cx mu2 = (Cx(3.0, 0.0) + (plus ? -i : i) * kSqrt3) * l1 / 6.0;
  Cx required = (plus ? -1.0 : 1.0) * 3.0 * kSqrt3 * p.a2 * i / ipow(l1, 3);
  Cx kp(3.0, plus ? kSqrt3 : -kSqrt3);   // (3 +- sqrt3 i)
  Cx km(3.0, plus ? -kSqrt3 : kSqrt3);
  Cx K1 = p.p1 * kp / (18.0 * p.a2);  // u v^2
  Cx K2 = p.p2 * km / (18.0 * p.a2);  // u^2 v
  Cx alpha = (2.0 * lin.gamma2 - lin.gamma1) / 3.0;
  Cx beta = (2.0 * lin.gamma1 - lin.gamma2) / 3.0;
  CaseTag tag = plus ? CaseTag::OmegaPlus : CaseTag::OmegaMinus;
  std::vector<SolutionBranch> out;
  auto ws = nth_roots(K1 * K2, 3);  // w = u v
  for (int k = 0; k < 3; ++k) {
    Cx w = ws[k];
    Cx u = K2 / w;
    Cx v = w / u;
    ExpPoly f = wave(u, mu1, alpha) + wave(v, mu2, beta);
    out.push_back(make_branch(std::move(f), tag, {k}, required, p, swapped));
  }
  return out;
}

// n = 4, lambda1 + lambda2 = 0:
//   f = c1 e^{(lambda1/2) z1} + c2 e^{-(lambda1/2) z1},
//   8 a2 c1^3 c2 = p1 e^{gamma1 z2}, 8 a2 c1 c2^3 = p2 e^{gamma2 z2},
//   a1 = -16 a2 / lambda1^4.
//   c1 = u e^{alpha z2}, c2 = v e^{beta z2},
//   alpha = (3 gamma1 - gamma2)/8, beta = (3 gamma2 - gamma1)/8.
// Enumeration: w = u v over the 4th roots of L1 L2, rho = u/v over the
// square roots of L1/L2, keeping pairs with w^2 rho = L1, then u = +-
// sqrt(w rho). Branch indices: [w index, rho index, sign index].
std::vector<SolutionBranch> construct_n4(const PdeProblem& p, bool swapped) {
  const LinearRhs& lin = *p.linear_rhs();
  Cx l1 = lin.lambda1;
  Cx L1 = p.p1 / (8.0 * p.a2), L2 = p.p2 / (8.0 * p.a2);
  Cx required = -16.0 * p.a2 / ipow(l1, 4);
  Cx alpha = (3.0 * lin.gamma1 - lin.gamma2) / 8.0;
  Cx beta = (3.0 * lin.gamma2 - lin.gamma1) / 8.0;
  std::vector<SolutionBranch> out;
  auto ws = nth_roots(L1 * L2, 4);
  auto rhos = nth_roots(L1 / L2, 2);
  for (int k = 0; k < 4; ++k) {
    for (int m = 0; m < 2; ++m) {
      Cx t = ws[k] * ws[k] * rhos[m];
      if (std::abs(t - L1) >= std::abs(t + L1)) continue;  // t resolves to -L1
      auto us = nth_roots(ws[k] * rhos[m], 2);
      for (int s = 0; s < 2; ++s) {
        Cx u = us[s];
        Cx v = ws[k] / u;
        ExpPoly f = wave(u, l1 / 2.0, alpha) + wave(v, -l1 / 2.0, beta);
        out.push_back(make_branch(std::move(f), CaseTag::SumZero, {k, m, s},
                                  required, p, swapped));
      }
    }
  }
  return out;
}

// n >= 5: solutions exist only when r - s reduces to a constant c and
// s = a z1 + g(z2) with a != 0; then f = c1 e^{s/n} with
//   c1^n (a1/a2 (a/n)^n + 1) = (p1 e^{c} + p2)/a2.
SolveResult construct_high_order(const PdeProblem& p) {
  const GeneralRhs& gen = *p.general_rhs();
  SolveResult res;

  Poly2 d = gen.r - gen.s;
  if (!d.without_constant().is_zero()) {
    res.status = SolveStatus::theorem_excluded;
    res.message =
        "no entire solution of this shape exists: r - s does not reduce to a "
        "constant";
    return res;
  }
  Cx c = d.constant_term();

  for (const auto& [key, coeff] : gen.s.terms()) {
    if (key.first >= 2 || (key.first == 1 && key.second >= 1)) {
      res.status = SolveStatus::theorem_excluded;
      res.message =
          "no entire solution of this shape exists: s is not of the form "
          "a*z1 + g(z2)";
      return res;
    }
  }
  Cx a = gen.s.coeff(1, 0);
  if (a == Cx(0.0, 0.0)) {
    res.status = SolveStatus::not_covered;
    res.message =
        "s does not depend on z1 (a = 0); this configuration is not covered "
        "by the classified solution families";
    return res;
  }

  Cx ah = p.a1 / p.a2;
  Cx denom = ah * ipow(a / static_cast<double>(p.n), p.n) + 1.0;
  Cx target = (p.p1 * std::exp(c) + p.p2) / p.a2;
  if (!is_finite(target) || !is_finite(denom)) {
    res.status = SolveStatus::not_covered;
    res.message = "amplitude equation overflows the double range";
    return res;
  }
  double denom_scale = std::abs(ah) * std::pow(std::abs(a / static_cast<double>(p.n)),
                                               static_cast<double>(p.n)) +
                       1.0;
  double target_scale =
      (std::abs(p.p1 * std::exp(c)) + std::abs(p.p2)) / std::abs(p.a2);
  bool denom_zero = std::abs(denom) <= kEpsCase * denom_scale;
  bool target_zero = std::abs(target) <= kEpsCase * (1.0 + target_scale);

  Poly2 exponent = (1.0 / static_cast<double>(p.n)) * gen.s;

  if (denom_zero && !target_zero) {
    res.status = SolveStatus::inconsistent_coefficients;
    res.message =
        "amplitude equation is inconsistent: a1/a2 (a/n)^n + 1 vanishes but "
        "p1 e^{r-s} + p2 does not";
    return res;
  }
  if (denom_zero && target_zero) {
    res.status = SolveStatus::indeterminate_amplitude;
    res.message =
        "every amplitude c1 solves the equation; emitting the witness c1 = 1 "
        "for the one-parameter family c1 e^{s/n}";
    ExpPoly f = ExpPoly::exp_of(exponent);
    res.branches.push_back(make_branch(std::move(f), CaseTag::ConstantDifference,
                                       {0}, p.a1, p, false));
    return res;
  }
  if (target_zero) {
    res.status = SolveStatus::ok;
    res.message =
        "p1 e^{r-s} + p2 = 0 forces c1^n = 0; the zero function is the only "
        "solution of this shape";
    res.branches.push_back(make_branch(ExpPoly{}, CaseTag::ConstantDifference,
                                       {0}, p.a1, p, false));
    return res;
  }

  res.status = SolveStatus::ok;
  auto roots = nth_roots(target / denom, p.n);
  for (int k = 0; k < p.n; ++k) {
    ExpPoly f = ExpPoly::term(Poly2::constant(roots[k]), exponent);
    res.branches.push_back(make_branch(std::move(f), CaseTag::ConstantDifference,
                                       {k}, p.a1, p, false));
  }
  return res;
}

namespace {

// A linear right-hand side in polynomial form, reduced if possible:
// degree <= 1 exponents, constants folded into p1/p2.
std::optional<PdeProblem> reduce_to_linear(const PdeProblem& p) {
  if (p.linear_rhs()) return p;
  const GeneralRhs& gen = *p.general_rhs();
  if (gen.r.total_degree() > 1 || gen.s.total_degree() > 1) return std::nullopt;
  Cx q1 = p.p1 * std::exp(gen.r.constant_term());
  Cx q2 = p.p2 * std::exp(gen.s.constant_term());
  if (!is_finite(q1) || !is_finite(q2) || q1 == Cx(0.0, 0.0) ||
      q2 == Cx(0.0, 0.0))
    return std::nullopt;
  LinearRhs lin{gen.r.coeff(1, 0), gen.r.coeff(0, 1), gen.s.coeff(1, 0),
                gen.s.coeff(0, 1)};
  if (lin.lambda1 == lin.lambda2) return std::nullopt;
  return PdeProblem::linear(p.n, p.a1, p.a2, q1, q2, lin);
}

GeneralRhs to_general(const LinearRhs& lin) {
  return {Poly2::monomial(1, 0, lin.lambda1) + Poly2::monomial(0, 1, lin.gamma1),
          Poly2::monomial(1, 0, lin.lambda2) + Poly2::monomial(0, 1, lin.gamma2)};
}

Classification classify_for_solve(const LinearRhs& lin) {
  if (lin.lambda1 == Cx(0.0, 0.0)) {
    // Only the swapped orientation can be meaningful here.
    CaseTag sw = classify_oriented(lin.lambda2, lin.lambda1, kEpsCase);
    return {sw, sw != CaseTag::NoCase};
  }
  return classify(lin);
}

}  // namespace

SolveResult solve(const PdeProblem& problem) {
  SolveResult res;
  if (problem.n <= 2) {
    res.status = SolveStatus::not_covered;
    res.message = "n = 1, 2 are outside the classified range (n >= 3)";
    return res;
  }

  if (problem.n >= 5) {
    PdeProblem p = problem;
    if (const auto* lin = problem.linear_rhs())
      p = PdeProblem::general(problem.n, problem.a1, problem.a2, problem.p1,
                              problem.p2, to_general(*lin));
    return construct_high_order(p);
  }

  auto linp = reduce_to_linear(problem);
  if (!linp) {
    res.status = SolveStatus::not_covered;
    res.message =
        "for n = 3, 4 the right-hand exponents must be linear forms "
        "lambda z1 + gamma z2 (+ constant)";
    return res;
  }
  const LinearRhs& lin = *linp->linear_rhs();
  Classification cls = classify_for_solve(lin);
  if (cls.tag == CaseTag::NoCase) {
    res.status = SolveStatus::theorem_excluded;
    res.message =
        "no admissible lambda relation holds (lambda2 = -3 lambda1, "
        "lambda2 = (1 +- sqrt(3) i)/2 lambda1 for n = 3; lambda1 + lambda2 = "
        "0 for n = 4): the equation has no entire solution of this shape";
    return res;
  }

  PdeProblem oriented = cls.swapped ? swapped_problem(*linp, lin) : *linp;
  if (problem.n == 3) {
    switch (cls.tag) {
      case CaseTag::NegThreeLambda:
        res.branches = construct_n3_neg_three(oriented, cls.swapped);
        break;
      case CaseTag::OmegaPlus:
        res.branches = construct_n3_omega(oriented, true, cls.swapped);
        break;
      case CaseTag::OmegaMinus:
        res.branches = construct_n3_omega(oriented, false, cls.swapped);
        break;
      default:
        res.status = SolveStatus::theorem_excluded;
        res.message =
            "for n = 3 the relation lambda1 + lambda2 = 0 admits no entire "
            "solution of this shape";
        return res;
    }
  } else {  // n == 4
    if (cls.tag != CaseTag::SumZero) {
      res.status = SolveStatus::theorem_excluded;
      res.message =
          "for n = 4 only the relation lambda1 + lambda2 = 0 admits entire "
          "solutions of this shape";
      return res;
    }
    res.branches = construct_n4(oriented, cls.swapped);
  }

  if (res.branches.empty()) {
    res.status = SolveStatus::not_covered;
    res.message = "constructor produced no branches";
    return res;
  }
  res.status = SolveStatus::ok;
  Cx required = res.branches.front().required_a1;
  res.a1_mismatch =
      std::abs(problem.a1 - required) > kEpsCase * std::abs(required);
  if (res.a1_mismatch) res.message = "given a1 does not match the required value";
  return res;
}

}  // namespace fpde
