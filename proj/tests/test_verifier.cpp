#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fpde/solver.hpp"
#include "fpde/verifier.hpp"

using namespace fpde;

namespace {

const Cx kI(0.0, 1.0);

PdeProblem golden_cubic() {
  return PdeProblem::linear(3, -1.0, 1.0, 6.0, 2.0,
                            LinearRhs{1.0, 0.0, -3.0, 0.0});
}

ExpPoly golden_solution() {
  return ExpPoly::exp_of(Poly2::monomial(1, 0, 1.0)) +
         ExpPoly::exp_of(Poly2::monomial(1, 0, -1.0));
}

// sin(q) = (e^{iq} - e^{-iq}) / (2i) as an exact two-term value.
ExpPoly sin_of(const Poly2& q) {
  Cx half_over_i = Cx(1.0, 0.0) / Cx(0.0, 2.0);
  return ExpPoly::term(Poly2::constant(half_over_i), Poly2::constant(kI) * q) -
         ExpPoly::term(Poly2::constant(half_over_i), Poly2::constant(-kI) * q);
}

}  // namespace

TEST_CASE("symbolic residual vanishes exactly for the cubic solution") {
  CHECK(residual(golden_solution(), golden_cubic()).is_zero());
}

TEST_CASE("symbolic residual of a non-solution is the projected RHS deficit") {
  // f = e^{z1} makes the homogeneous side vanish (a1 = -1, a2 = 1), so
  // the residual is exactly -(6 e^{z1} + 2 e^{-3 z1}).
  ExpPoly f = ExpPoly::exp_of(Poly2::z1());
  ExpPoly expected =
      Cx(-6.0, 0.0) * ExpPoly::exp_of(Poly2::monomial(1, 0, 1.0)) +
      Cx(-2.0, 0.0) * ExpPoly::exp_of(Poly2::monomial(1, 0, -3.0));
  CHECK(residual(f, golden_cubic()).identical(expected));
}

TEST_CASE("trigonometric identities check out through the residual") {
  // (d/dz1 sin(z1 + z2^2))^2 + sin(z1 + z2^2)^2 = 1.
  Poly2 q = Poly2::z1() + Poly2::monomial(0, 2, 1.0);
  PdeProblem p = PdeProblem::general(2, 1.0, 1.0, 0.5, 0.5,
                                     GeneralRhs{Poly2{}, Poly2{}});
  CHECK(residual(sin_of(q), p).is_zero());

  // f = e^{z2} sin(z1 + z2): (df)^2 + f^2 = e^{2 z2}.
  ExpPoly f = ExpPoly::exp_of(Poly2::z2()) * sin_of(Poly2::z1() + Poly2::z2());
  Poly2 two_z2 = Poly2::monomial(0, 1, 2.0);
  PdeProblem p2 = PdeProblem::general(2, 1.0, 1.0, 0.5, 0.5,
                                      GeneralRhs{two_z2, two_z2});
  CHECK(residual(f, p2).is_zero());

  // Breaking the amplitude breaks the identity.
  PdeProblem p3 = PdeProblem::general(2, 1.0, 1.0, 0.6, 0.5,
                                      GeneralRhs{two_z2, two_z2});
  CHECK(!residual(f, p3).is_zero());
}

TEST_CASE("numeric cross-check agrees with the symbolic verdict") {
  ResidualReport ok = verify(golden_solution(), golden_cubic(), 256, 7);
  CHECK(ok.symbolic_zero);
  CHECK(ok.max_relative_numeric_residual <= 1e-9);
  CHECK(ok.sample_count == 256);
  CHECK(ok.seed == 7);
  CHECK(ok.skipped_points == 0);
  CHECK(!ok.unreliable);

  // A 1e-3 amplitude perturbation is symbolically and numerically visible.
  ExpPoly off = Cx(1.0 + 1e-3, 0.0) * ExpPoly::exp_of(Poly2::z1()) +
                ExpPoly::exp_of(Poly2::monomial(1, 0, -1.0));
  ResidualReport bad = verify(off, golden_cubic(), 256, 7);
  CHECK(!bad.symbolic_zero);
  CHECK(bad.max_relative_numeric_residual > 1e-6);
}

TEST_CASE("verification is deterministic in the seed") {
  ExpPoly f = golden_solution();
  ResidualReport a = verify(f, golden_cubic(), 300, 12345);
  ResidualReport b = verify(f, golden_cubic(), 300, 12345);
  CHECK(a.max_relative_numeric_residual == b.max_relative_numeric_residual);
  CHECK(a.skipped_points == b.skipped_points);

  ExpPoly off = Cx(1.1, 0.0) * golden_solution();
  ResidualReport c = verify(off, golden_cubic(), 300, 12345);
  ResidualReport d = verify(off, golden_cubic(), 300, 54321);
  CHECK(c.max_relative_numeric_residual != d.max_relative_numeric_residual);
}

TEST_CASE("overflowing samples are counted and flagged") {
  ExpPoly f = ExpPoly::exp_of(Poly2::monomial(1, 0, 2000.0));
  PdeProblem p = PdeProblem::linear(1, 1.0, 1.0, 1.0, 2.0,
                                    LinearRhs{1.0, 0.0, -1.0, 0.0});
  ResidualReport rep = verify(f, p, 500, 9);
  CHECK(rep.skipped_points > 50);
  CHECK(rep.skipped_points <= 500);
  CHECK(rep.unreliable);
  CHECK(!rep.symbolic_zero);

  CHECK_THROWS_AS(verify(f, p, 0, 1), std::invalid_argument);
}

TEST_CASE("every constructed branch passes both verification routes") {
  std::vector<PdeProblem> problems;
  problems.push_back(golden_cubic());
  problems.push_back(PdeProblem::linear(3, -1.0, 1.0, Cx(2.0, 1.0), Cx(0.5, -1.5),
                                        LinearRhs{Cx(1.0, 0.5), 1.0,
                                                  Cx(-3.0, -1.5), -2.0}));
  problems.push_back(PdeProblem::linear(
      3, 1.0, 1.0, Cx(1.0, 1.0), 2.0,
      LinearRhs{1.0, 0.0, Cx(0.5, 0.5 * std::sqrt(3.0)), 1.0}));
  problems.push_back(PdeProblem::linear(
      3, 1.0, Cx(0.0, 2.0), 3.0, Cx(1.0, -1.0),
      LinearRhs{Cx(0.0, 1.0), 0.5, Cx(0.0, 1.0) * Cx(0.5, -0.5 * std::sqrt(3.0)),
                1.0}));
  problems.push_back(PdeProblem::linear(4, -16.0, 1.0, 8.0, 8.0,
                                        LinearRhs{1.0, 0.0, -1.0, 0.0}));
  problems.push_back(PdeProblem::linear(4, 1.0, 2.0, Cx(1.0, 2.0), Cx(-3.0, 1.0),
                                        LinearRhs{Cx(2.0, -1.0), 1.0,
                                                  Cx(-2.0, 1.0), Cx(0.0, 1.0)}));
  Poly2 s = Poly2::monomial(1, 0, 5.0) + Poly2::monomial(0, 2, Cx(0.0, 1.0));
  problems.push_back(
      PdeProblem::general(5, 1.0, 1.0, Cx(1.0, 1.0), 2.0, GeneralRhs{s, s}));
  Poly2 s7 = Poly2::monomial(1, 0, Cx(2.0, 1.0)) + Poly2::z2();
  problems.push_back(
      PdeProblem::general(7, 2.0, -1.0, 1.0, Cx(0.0, 3.0), GeneralRhs{s7, s7}));

  int branches_seen = 0;
  for (const auto& p : problems) {
    SolveResult res = solve(p);
    REQUIRE(res.status == SolveStatus::ok);
    for (const auto& b : res.branches) {
      ++branches_seen;
      CHECK(b.verified);
      ResidualReport rep = verify(b.f, p.with_a1(b.required_a1), 128, 11);
      CHECK(rep.symbolic_zero);
      CHECK(rep.max_relative_numeric_residual <= 1e-6);
      CHECK(!rep.unreliable);
    }
  }
  CHECK(branches_seen >= 30);
}
