#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <variant>

#include "fpde/parse.hpp"
#include "support/generators.hpp"

using namespace fpde;

namespace {

ExpPoly parsed(std::string_view s) {
  ParseResult r = parse_expr(s);
  REQUIRE_MESSAGE(std::holds_alternative<ExpPoly>(r),
                  "expected success for: " << std::string(s));
  return std::get<ExpPoly>(r);
}

ParseDiagnostic rejected(std::string_view s) {
  ParseResult r = parse_expr(s);
  REQUIRE_MESSAGE(std::holds_alternative<ParseDiagnostic>(r),
                  "expected a diagnostic for: " << std::string(s));
  return std::get<ParseDiagnostic>(r);
}

}  // namespace

TEST_CASE("grammar accepts the documented forms") {
  CHECK(parsed("z1").identical(ExpPoly::from_poly(Poly2::z1())));
  CHECK(parsed(" 2 * z1 ^ 2 ")
            .identical(ExpPoly::from_poly(Poly2::monomial(2, 0, 2.0))));
  CHECK(parsed("z1*z2 - i").identical(ExpPoly::from_poly(
      Poly2::monomial(1, 1, 1.0) + Poly2::constant(Cx(0.0, -1.0)))));
  CHECK(parsed("exp(z1)").identical(ExpPoly::exp_of(Poly2::z1())));
  CHECK(parsed("3*exp(2*z1+z2)")
            .identical(Cx(3.0, 0.0) *
                       ExpPoly::exp_of(Poly2::monomial(1, 0, 2.0) + Poly2::z2())));
  CHECK(parsed("z1^0").identical(ExpPoly::constant(1.0)));
  CHECK(parsed("-z1 + z1").is_zero());
  CHECK(parsed("(1+2i)/4").as_constant().value() == Cx(0.25, 0.5));
  CHECK(parsed("1/2i").as_constant().value() == Cx(0.0, -0.5));

  // exp of a constant folds into a plain scalar.
  auto e = parsed("exp(1)").as_constant();
  REQUIRE(e.has_value());
  CHECK(std::abs(*e - std::exp(Cx(1.0, 0.0))) < 1e-15);

  // The imaginary suffix binds only when adjacent to the literal.
  CHECK(parsed("2i").as_constant().value() == Cx(0.0, 2.0));
  CHECK(rejected("2 i").kind == DiagnosticKind::syntax);
}

TEST_CASE("diagnostics carry kind and byte offset") {
  auto d = rejected("z1 + z3");
  CHECK(d.kind == DiagnosticKind::syntax);
  CHECK(d.position == 5);

  d = rejected("");
  CHECK(d.kind == DiagnosticKind::syntax);
  CHECK(d.position == 0);

  d = rejected("z1 +");
  CHECK(d.kind == DiagnosticKind::syntax);

  d = rejected("(z1 + z2");
  CHECK(d.kind == DiagnosticKind::syntax);
  CHECK(d.position == 8);

  d = rejected("z1 ^ z2");
  CHECK(d.kind == DiagnosticKind::syntax);
  CHECK(d.position == 5);

  d = rejected("z1^256");
  CHECK(d.kind == DiagnosticKind::syntax);
  CHECK(d.position == 3);

  d = rejected("z1/2");
  CHECK(d.kind == DiagnosticKind::syntax);
  CHECK(d.position == 2);
  CHECK(d.message.find("constant") != std::string::npos);

  d = rejected("1/0");
  CHECK(d.message.find("zero") != std::string::npos);

  d = rejected("exp(exp(z1))");
  CHECK(d.kind == DiagnosticKind::non_polynomial_exponent);
  CHECK(d.position == 4);

  d = rejected("1 + exp(2*exp(z2) + z1)");
  CHECK(d.kind == DiagnosticKind::non_polynomial_exponent);
  CHECK(d.position == 8);

  d = rejected("1e999");
  CHECK(d.kind == DiagnosticKind::numeric_literal_overflow);
  CHECK(d.position == 0);

  CHECK(std::string(to_string(DiagnosticKind::syntax)) == "syntax");
  CHECK(std::string(to_string(DiagnosticKind::non_polynomial_exponent)) ==
        "non-polynomial-exponent");
  CHECK(std::string(to_string(DiagnosticKind::numeric_literal_overflow)) ==
        "numeric-literal-overflow");
}

TEST_CASE("parse_complex accepts constants and rejects the rest") {
  CHECK(std::get<Cx>(parse_complex("1+2i")) == Cx(1.0, 2.0));
  CHECK(std::get<Cx>(parse_complex("-3")) == Cx(-3.0, 0.0));
  CHECK(std::get<Cx>(parse_complex("0.5i")) == Cx(0.0, 0.5));
  CHECK(std::get<Cx>(parse_complex("(1+2i)/4")) == Cx(0.25, 0.5));
  auto bad = std::get<ParseDiagnostic>(parse_complex("z1"));
  CHECK(bad.message.find("constant") != std::string::npos);
}

TEST_CASE("pinned output forms") {
  CHECK(format_expr(ExpPoly{}) == "0");
  CHECK(format_expr(ExpPoly::exp_of(Poly2::z1())) == "exp(z1)");
  CHECK(format_expr(Cx(2.0, 0.0) *
                    ExpPoly::exp_of(Poly2::monomial(1, 0, -3.0))) ==
        "2*exp(-3*z1)");
  CHECK(format_expr(ExpPoly::exp_of(Poly2::z1()) +
                    ExpPoly::exp_of(Poly2::monomial(1, 0, -1.0))) ==
        "exp(-z1) + exp(z1)");
  CHECK(format_expr(ExpPoly::term(Poly2::z1() + Poly2::constant(1.0),
                                  Poly2::z2())) == "(z1 + 1)*exp(z2)");

  CHECK(format_complex(Cx(1.0, 0.0)) == "1");
  CHECK(format_complex(Cx(-1.5, 0.0)) == "-1.5");
  CHECK(format_complex(Cx(0.0, 1.0)) == "i");
  CHECK(format_complex(Cx(0.0, -1.0)) == "-i");
  CHECK(format_complex(Cx(0.0, 2.0)) == "2i");
  CHECK(format_complex(Cx(1.0, 2.0)) == "(1+2i)");
  CHECK(format_complex(Cx(1.0, -2.0)) == "(1-2i)");
  CHECK(format_complex(Cx(1.0, 1.0)) == "(1+i)");

  CHECK(format_poly(Poly2::monomial(2, 0, 1.0) - Poly2::z2()) == "z1^2 - z2");
  CHECK(format_poly(Poly2::monomial(1, 1, 2.0) + Poly2::constant(Cx(0, 1))) ==
        "2*z1*z2 + i");
  CHECK(format_poly(-Poly2::z1()) == "-z1");
  CHECK(format_poly(Poly2{}) == "0");
}

TEST_CASE("format and parse round-trip with representation equality") {
  SplitMix64 rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    ExpPoly f = testgen::dyadic_exp_poly(rng);
    CHECK(parsed(format_expr(f)).identical(f));
  }
  // Shortest decimal forms round-trip arbitrary doubles exactly, so this
  // holds for continuous coefficients too.
  for (int iter = 0; iter < 200; ++iter) {
    ExpPoly f = testgen::cont_exp_poly(rng);
    CHECK(parsed(format_expr(f)).identical(f));
  }
}

TEST_CASE("parser is total on arbitrary bytes") {
  SplitMix64 rng(777);
  const std::string alphabet = " z12iexp()+-*/^.0123456789";
  for (int iter = 0; iter < 2000; ++iter) {
    std::string s;
    int len = static_cast<int>(rng.next() % 40);
    for (int k = 0; k < len; ++k)
      s += alphabet[rng.next() % alphabet.size()];
    ParseResult r = parse_expr(s);  // must not throw
    if (auto* d = std::get_if<ParseDiagnostic>(&r))
      CHECK(d->position <= s.size());
  }
  for (int iter = 0; iter < 2000; ++iter) {
    std::string s;
    int len = static_cast<int>(rng.next() % 40);
    for (int k = 0; k < len; ++k)
      s += static_cast<char>(rng.next() & 0xff);
    ParseResult r = parse_expr(s);  // must not throw
    if (auto* d = std::get_if<ParseDiagnostic>(&r))
      CHECK(d->position <= s.size());
  }
}

TEST_CASE("sine combination parses and evaluates correctly") {
  ExpPoly f = parsed(
      "(1/(2i))*exp(i*(z1+z2^2)) - (1/(2i))*exp(-i*(z1+z2^2))");
  SplitMix64 rng(31);
  for (int k = 0; k < 50; ++k) {
    Cx x = testgen::cont_cx(rng), y = testgen::cont_cx(rng);
    auto v = f.eval(x, y);
    REQUIRE(v.has_value());
    Cx want = std::sin(x + y * y);
    CHECK(std::abs(*v - want) < 1e-9 * (1.0 + std::abs(want)));
  }
}
