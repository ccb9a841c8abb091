#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpde/poly2.hpp"
#include "support/generators.hpp"

using namespace fpde;

TEST_CASE("construction and canonical pruning") {
  CHECK(Poly2{}.is_zero());
  CHECK(Poly2::monomial(0, 0, Cx(0.0, 0.0)).is_zero());
  CHECK(Poly2::constant(3.0).constant_term() == Cx(3.0, 0.0));
  CHECK((Poly2::constant(3.0) - Poly2::constant(3.0)).is_zero());

  // Relative pruning: 1e-15 against a unit-scale polynomial disappears...
  Poly2 p = Poly2::constant(1.0) + Poly2::monomial(1, 0, 1e-15);
  CHECK(p.terms().size() == 1);
  CHECK(p.coeff(1, 0) == Cx(0.0, 0.0));
  // ...but survives on its own (pruning is relative, not absolute).
  Poly2 tiny = Poly2::monomial(1, 0, 1e-15);
  CHECK(tiny.coeff(1, 0) == Cx(1e-15, 0.0));
}

TEST_CASE("degrees") {
  CHECK(Poly2{}.total_degree() == kZeroPolyDegree);
  CHECK(Poly2::constant(2.0).total_degree() == 0);
  CHECK(Poly2::monomial(2, 1, 1.0).total_degree() == 3);
  CHECK(Poly2{}.is_constant());
  CHECK(Poly2::constant(5.0).is_constant());
  CHECK(!Poly2::z1().is_constant());
}

TEST_CASE("arithmetic identities") {
  Poly2 s = Poly2::z1() + Poly2::z2();
  Poly2 sq = s * s;
  CHECK(sq.coeff(2, 0) == Cx(1.0, 0.0));
  CHECK(sq.coeff(1, 1) == Cx(2.0, 0.0));
  CHECK(sq.coeff(0, 2) == Cx(1.0, 0.0));
  CHECK(sq.terms().size() == 3);

  Poly2 d = (Poly2::z1() + Poly2::z2()) - (Poly2::z1() - Poly2::z2());
  CHECK(d.identical(2.0 * Poly2::z2()));

  CHECK((Poly2::z1() * Poly2{}).is_zero());
}

TEST_CASE("partial derivative in z1") {
  Poly2 p = Poly2::monomial(2, 1, 1.0) + Poly2::z2();
  CHECK(p.partial_z1().identical(Poly2::monomial(1, 1, 2.0)));
  CHECK(Poly2::z2().partial_z1().is_zero());
  CHECK(Poly2{}.partial_z1().is_zero());
}

TEST_CASE("evaluation") {
  Poly2 p = Poly2::constant(Cx(1.0, 2.0)) + Poly2::monomial(2, 0, 1.0);
  Cx v = p.eval(Cx(0.0, 1.0), Cx(0.0, 0.0));  // (1+2i) + i^2 = 2i
  CHECK(std::abs(v - Cx(0.0, 2.0)) < 1e-15);
  CHECK(Poly2{}.eval(Cx(5.0, 5.0), Cx(1.0, 1.0)) == Cx(0.0, 0.0));
}

TEST_CASE("representation equality") {
  Poly2 a = Poly2::z1() + Poly2::constant(1.0);
  Poly2 b = Poly2::constant(1.0) + Poly2::z1();
  CHECK(a.identical(b));
  CHECK(!a.identical(Poly2::z1()));
}

TEST_CASE("non-finite coefficients are rejected") {
  CHECK_THROWS_AS(Poly2::constant(Cx(1e308, 0.0)) * Poly2::constant(Cx(1e308, 0.0)),
                  std::overflow_error);
}

TEST_CASE("product structure on random exact inputs") {
  SplitMix64 rng(2024);
  for (int iter = 0; iter < 500; ++iter) {
    Poly2 p = testgen::dyadic_poly(rng);
    Poly2 q = testgen::dyadic_poly(rng);
    Poly2 pq = p * q;
    if (p.is_zero() || q.is_zero()) {
      CHECK(pq.is_zero());
      continue;
    }
    CHECK(!pq.is_zero());
    CHECK(pq.total_degree() <= p.total_degree() + q.total_degree());
    // evaluation homomorphism
    Cx x = testgen::cont_cx(rng), y = testgen::cont_cx(rng);
    Cx lhs = pq.eval(x, y);
    Cx rhs = p.eval(x, y) * q.eval(x, y);
    double scale = 1.0 + std::abs(lhs) + std::abs(rhs);
    CHECK(std::abs(lhs - rhs) / scale < 1e-12);
  }
}

TEST_CASE("ring laws on random exact inputs (bitwise)") {
  SplitMix64 rng(77);
  for (int iter = 0; iter < 500; ++iter) {
    Poly2 p = testgen::dyadic_poly(rng);
    Poly2 q = testgen::dyadic_poly(rng);
    Poly2 r = testgen::dyadic_poly(rng);
    CHECK((p + q).identical(q + p));
    CHECK((p * q).identical(q * p));
    CHECK(((p + q) + r).identical(p + (q + r)));
    CHECK(((p * q) * r).identical(p * (q * r)));
    CHECK((p * (q + r)).identical(p * q + p * r));
  }
}
